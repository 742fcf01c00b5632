//! ISO15693 physical-layer codec.
//!
//! Bit-exact construction/parsing of inventory request frames, 1-out-of-4 PPM
//! synthesis of the reader field envelope, and Manchester-on-subcarrier
//! synthesis/demodulation of tag load-modulation responses for all four
//! response modes (single/dual subcarrier x high/low data rate).
//!
//! Everything here operates on real-valued envelope (magnitude) waveforms;
//! the 13.56 MHz carrier itself is never synthesized.

mod crc;
mod mode;
mod reader;
mod request;
mod tag;
mod waveform;

pub use crc::{crc16, CRC_FINAL_XOR, CRC_INIT, CRC_POLY_REFLECTED};
pub use mode::{
    ResponseMode, ResponseModeKind, CARRIER_HZ, RX_SAMPLE_RATE_HZ, SUBCARRIER_ONE_HZ,
    SUBCARRIER_TWO_HZ, TX_SAMPLE_RATE_HZ,
};
pub use reader::{decode_reader_waveform, encode_reader_waveform};
pub use request::InventoryRequest;
pub use tag::{
    demodulate_tag_response, encode_tag_response, render_response, response_duration_s,
    tag_bit_duration_s, tag_sof_duration_s, tag_sof_silence_s, ToneParams,
    RESPONSE_PREAMBLE_BITS,
};
pub use waveform::{Waveform, WaveformSidecar};

use thiserror::Error;

/// Errors produced by frame construction/parsing and waveform codecs.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum CodecError {
    /// Frame shorter than the minimum 5 bytes (flags, command, mask length, CRC).
    #[error("frame too short: {len} bytes, need at least 5")]
    TooShort { len: usize },

    /// Recomputed CRC does not match the CRC carried by the frame.
    #[error("crc mismatch: computed {computed:#06x}, frame carries {found:#06x}")]
    BadCrc { computed: u16, found: u16 },

    /// Frame hex string is malformed.
    #[error("invalid hex frame: {reason}")]
    BadHex { reason: String },

    /// Sample rate too low to resolve the coding structure.
    #[error("sample rate {rate_hz} Hz below the {min_hz} Hz floor")]
    BadRate { rate_hz: f64, min_hz: f64 },

    /// No start-of-frame delimiter found in the waveform.
    #[error("no start-of-frame found")]
    NoSof,

    /// A PPM pause could not be attributed to a unique slot.
    #[error("symbol {symbol}: pause not attributable to a unique slot")]
    SymbolAmbiguous { symbol: usize },

    /// Decoded symbol stream does not assemble into whole bytes.
    #[error("decoded {bits} bits, not a whole number of bytes")]
    TruncatedFrame { bits: usize },

    /// Per-bit correlation decision margin below the confidence floor.
    #[error("bit {bit}: decision margin {margin:.4} below floor {floor:.4}")]
    LowConfidence { bit: usize, margin: f64, floor: f64 },

    /// Empty input where samples or bits are required.
    #[error("empty {what}")]
    EmptyInput { what: &'static str },
}
