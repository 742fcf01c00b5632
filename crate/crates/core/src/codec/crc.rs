//! CRC-16 over inventory request frames.
//!
//! The parameterization was pinned by exhaustively searching the standard
//! CRC-16 variants (reflection, init, final XOR, wire byte order) against the
//! four published command frames; exactly one variant reproduces all four.
//! It is the X.25 CRC (reflected 0x1021, init 0xFFFF, final XOR 0xFFFF) with
//! the 16-bit value appended most-significant byte first.

/// Reflected form of the CRC-16 polynomial x^16 + x^12 + x^5 + 1.
pub const CRC_POLY_REFLECTED: u16 = 0x8408;
/// Shift-register preset.
pub const CRC_INIT: u16 = 0xFFFF;
/// Final complement.
pub const CRC_FINAL_XOR: u16 = 0xFFFF;

/// CRC-16 of `payload`, bit-reflected, preset 0xFFFF, complemented output.
pub fn crc16(payload: &[u8]) -> u16 {
    let mut crc = CRC_INIT;
    for &byte in payload {
        crc ^= u16::from(byte);
        for _ in 0..8 {
            crc = if crc & 1 != 0 {
                (crc >> 1) ^ CRC_POLY_REFLECTED
            } else {
                crc >> 1
            };
        }
    }
    crc ^ CRC_FINAL_XOR
}

/// Append the CRC to a frame, most-significant byte first.
pub(crate) fn append_crc(frame: &mut Vec<u8>) {
    let crc = crc16(frame);
    frame.extend_from_slice(&crc.to_be_bytes());
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_frame_crcs() {
        assert_eq!(crc16(&[0x26, 0x01, 0x00]), 0x0AF6);
        assert_eq!(crc16(&[0x24, 0x01, 0x00]), 0xBF4E);
        assert_eq!(crc16(&[0x27, 0x01, 0x00]), 0x502A);
        assert_eq!(crc16(&[0x25, 0x01, 0x00]), 0xE592);
    }

    #[test]
    fn append_is_msb_first() {
        let mut frame = vec![0x26, 0x01, 0x00];
        append_crc(&mut frame);
        assert_eq!(frame, vec![0x26, 0x01, 0x00, 0x0A, 0xF6]);
    }
}
