//! Plain-text sequence files.
//!
//! A file holds optional `#` comment lines followed by exactly one line of
//! digit characters (`01` for binary, `0123` for quaternary) and an optional
//! trailing newline.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

pub fn parse_sequence(text: &str, alphabet: u8) -> Result<Vec<u8>> {
    let mut lines = text.split('\n').map(|l| l.strip_suffix('\r').unwrap_or(l));
    let body = loop {
        match lines.next() {
            Some(line) if line.starts_with('#') => continue,
            Some(line) => break line,
            None => return Err(Error::Parse("no digit line".into())),
        }
    };
    if body.is_empty() {
        return Err(Error::Parse("empty digit line".into()));
    }
    if lines.any(|rest| !rest.is_empty()) {
        return Err(Error::Parse("content after the digit line".into()));
    }
    body.chars()
        .enumerate()
        .map(|(position, ch)| match ch.to_digit(10) {
            Some(d) if d < alphabet as u32 => Ok(d as u8),
            Some(d) => Err(Error::DigitOutOfRange {
                digit: d as u8,
                position,
                alphabet,
            }),
            None => Err(Error::Parse(format!(
                "unexpected character {ch:?} at position {position}"
            ))),
        })
        .collect()
}

pub fn render_sequence(digits: &[u8], comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    out.extend(digits.iter().map(|&d| char::from(b'0' + d)));
    out.push('\n');
    out
}

pub fn digit_string(digits: &[u8]) -> String {
    digits.iter().map(|&d| char::from(b'0' + d)).collect()
}

pub fn read_sequence_file(path: &Path, alphabet: u8) -> Result<Vec<u8>> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))?;
    parse_sequence(&text, alphabet)
}

pub fn write_sequence_file(path: &Path, digits: &[u8], comments: &[String]) -> Result<()> {
    fs::write(path, render_sequence(digits, comments))
        .map_err(|e| Error::Io(format!("cannot write {}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_plain_and_commented() {
        assert_eq!(parse_sequence("0123", 4).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(parse_sequence("0123\n", 4).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(
            parse_sequence("# g1 p=5\n#x\n0123030321\n", 4).unwrap(),
            vec![0, 1, 2, 3, 0, 3, 0, 3, 2, 1]
        );
        assert_eq!(parse_sequence("011\r\n", 2).unwrap(), vec![0, 1, 1]);
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(
            parse_sequence("0127", 4),
            Err(Error::DigitOutOfRange { digit: 7, position: 3, .. })
        ));
        assert!(matches!(
            parse_sequence("012", 2),
            Err(Error::DigitOutOfRange { digit: 2, .. })
        ));
        assert!(matches!(parse_sequence("", 4), Err(Error::Parse(_))));
        assert!(matches!(parse_sequence("# only\n", 4), Err(Error::Parse(_))));
        assert!(matches!(parse_sequence("01\n23\n", 4), Err(Error::Parse(_))));
        assert!(matches!(parse_sequence("01 2", 4), Err(Error::Parse(_))));
        assert!(matches!(parse_sequence("\n0123", 4), Err(Error::Parse(_))));
    }

    #[test]
    fn render_then_parse() {
        let digits = vec![3, 0, 1, 2, 2];
        let text = render_sequence(&digits, &["family=external".into()]);
        assert_eq!(text, "# family=external\n30122\n");
        assert_eq!(parse_sequence(&text, 4).unwrap(), digits);
    }

    #[test]
    fn file_io() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("seq.txt");
        write_sequence_file(&path, &[1, 1, 2, 0, 0, 3], &[]).unwrap();
        assert_eq!(read_sequence_file(&path, 4).unwrap(), vec![1, 1, 2, 0, 0, 3]);
        assert!(matches!(
            read_sequence_file(&dir.path().join("missing"), 4),
            Err(Error::Io(_))
        ));
    }
}
