//! OEIS b-files and term-by-term comparison with the closed forms.
//!
//! A b-file is plain text with one `<index> <value>` pair per line; blank
//! lines and lines starting with `#` are ignored. Fetching and caching live in
//! the std companion crate; everything here is pure.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::formulas::{evaluate, SequenceId};

/// The four OEIS entries the rectangle sequences are identified with.
pub const IDENTIFIED: [(&str, SequenceId); 4] = [
    ("A004320", SequenceId::AHalf),
    ("A002417", SequenceId::BHalf),
    ("A330805", SequenceId::A),
    ("A213840", SequenceId::B),
];

/// Check the `A` + six digits shape of an OEIS id.
pub fn validate_id(id: &str) -> Result<()> {
    let bytes = id.as_bytes();
    if bytes.len() == 7 && bytes[0] == b'A' && bytes[1..].iter().all(u8::is_ascii_digit) {
        Ok(())
    } else {
        Err(Error::InvalidSequenceId(id.to_string()))
    }
}

/// The sequence an OEIS id is paired with, if it is one of [`IDENTIFIED`].
pub fn pairing(id: &str) -> Result<SequenceId> {
    validate_id(id)?;
    IDENTIFIED
        .iter()
        .find(|(oeis, _)| *oeis == id)
        .map(|&(_, seq)| seq)
        .ok_or_else(|| Error::UnknownSequence(id.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFile {
    pub sequence_id: String,
    /// Strictly increasing indices.
    pub terms: Vec<(i64, i128)>,
}

impl BFile {
    pub fn new(sequence_id: &str, terms: Vec<(i64, i128)>) -> Result<Self> {
        validate_id(sequence_id)?;
        if let Some(k) = terms.windows(2).position(|w| w[0].0 >= w[1].0) {
            return Err(Error::NonMonotonicIndex {
                line: k + 2,
                index: terms[k + 1].0,
            });
        }
        Ok(BFile {
            sequence_id: sequence_id.to_string(),
            terms,
        })
    }

    pub fn term(&self, index: i64) -> Option<i128> {
        self.terms
            .binary_search_by_key(&index, |&(i, _)| i)
            .ok()
            .map(|k| self.terms[k].1)
    }

    pub fn first_index(&self) -> Option<i64> {
        self.terms.first().map(|&(i, _)| i)
    }
}

/// Writes the terms in b-file format, without comments.
impl fmt::Display for BFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in &self.terms {
            writeln!(f, "{i} {v}")?;
        }
        Ok(())
    }
}

/// Parse b-file text for `sequence_id`.
pub fn parse_bfile(sequence_id: &str, text: &str) -> Result<BFile> {
    let mut terms: Vec<(i64, i128)> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let malformed = |message: String| Error::MalformedLine {
            line: line_no,
            message,
        };
        let mut fields = line.split_ascii_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(malformed(format!(
                "expected '<index> <value>', got '{line}'"
            )));
        };
        let index: i64 = index
            .parse()
            .map_err(|_| malformed(format!("bad index '{index}'")))?;
        let value: i128 = value
            .parse()
            .map_err(|_| malformed(format!("bad value '{value}'")))?;
        if terms.last().is_some_and(|&(prev, _)| prev >= index) {
            return Err(Error::NonMonotonicIndex {
                line: line_no,
                index,
            });
        }
        terms.push((index, value));
    }
    BFile::new(sequence_id, terms)
}

/// Where a b-file came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TermSource {
    Network,
    Cache,
    Fixture,
}

impl TermSource {
    pub fn name(self) -> &'static str {
        match self {
            TermSource::Network => "network",
            TermSource::Cache => "cache",
            TermSource::Fixture => "fixture",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub n: u64,
    /// The b-file's term.
    pub expected: i128,
    /// The closed form's value.
    pub got: u128,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqCheckReport {
    pub sequence_id: String,
    pub sequence: SequenceId,
    /// Checked `n`, inclusive.
    pub checked_range: (u64, u64),
    pub matches: u64,
    pub first_mismatch: Option<Mismatch>,
    pub source: TermSource,
}

impl SeqCheckReport {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compare `evaluate(sequence, n)` with the b-file term of index `n` for
/// `n = 1..=n_max`.
///
/// Terms are aligned by index, so a b-file starting at offset 0 simply has its
/// `0` term ignored. Every requested `n` must be present.
pub fn check_terms(
    bfile: &BFile,
    sequence: SequenceId,
    n_max: u64,
    source: TermSource,
) -> Result<SeqCheckReport> {
    let paired = pairing(&bfile.sequence_id)?;
    if paired != sequence {
        return Err(Error::RejectedPairing {
            oeis: bfile.sequence_id.clone(),
            sequence,
        });
    }
    let mut report = SeqCheckReport {
        sequence_id: bfile.sequence_id.clone(),
        sequence,
        checked_range: (1, n_max),
        matches: 0,
        first_mismatch: None,
        source,
    };
    for n in 1..=n_max {
        let expected = i64::try_from(n)
            .ok()
            .and_then(|i| bfile.term(i))
            .ok_or_else(|| Error::InsufficientTerms {
                oeis: bfile.sequence_id.clone(),
                n,
            })?;
        let got = evaluate(sequence, n)?.get();
        if i128::try_from(got).ok() == Some(expected) {
            report.matches += 1;
        } else if report.first_mismatch.is_none() {
            report.first_mismatch = Some(Mismatch { n, expected, got });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        let b = parse_bfile("A004320", "1 3\n2 16\n").unwrap();
        assert_eq!(b.terms, vec![(1, 3), (2, 16)]);
        let b = parse_bfile("A004320", "# comment\n").unwrap();
        assert!(b.terms.is_empty());
        assert_eq!(
            parse_bfile("A004320", "1 x"),
            Err(Error::MalformedLine {
                line: 1,
                message: "bad value 'x'".into()
            })
        );
    }

    #[test]
    fn parse_is_strict() {
        assert!(matches!(
            parse_bfile("A004320", "1 3\n\n# c\n3 4 5\n"),
            Err(Error::MalformedLine { line: 4, .. })
        ));
        assert!(matches!(
            parse_bfile("A004320", "1\n"),
            Err(Error::MalformedLine { line: 1, .. })
        ));
        assert_eq!(
            parse_bfile("A004320", "2 3\n2 4\n"),
            Err(Error::NonMonotonicIndex { line: 2, index: 2 })
        );
        assert!(parse_bfile("A00432", "").is_err());
        assert!(parse_bfile("B004320", "").is_err());
        let b = parse_bfile("A004320", "  0 0\r\n1   3  \n").unwrap();
        assert_eq!(b.terms, vec![(0, 0), (1, 3)]);
    }

    #[test]
    fn pairings() {
        assert_eq!(pairing("A330805"), Ok(SequenceId::A));
        assert!(matches!(pairing("A000000"), Err(Error::UnknownSequence(_))));
        assert!(matches!(pairing("nope"), Err(Error::InvalidSequenceId(_))));
    }

    #[test]
    fn check_aligns_by_index() {
        let b = parse_bfile("A004320", "0 0\n1 3\n2 16\n3 50\n").unwrap();
        let r = check_terms(&b, SequenceId::AHalf, 3, TermSource::Fixture).unwrap();
        assert!(r.passed());
        assert_eq!(r.matches, 3);

        let shifted = parse_bfile("A004320", "1 0\n2 3\n3 16\n").unwrap();
        let r = check_terms(&shifted, SequenceId::AHalf, 3, TermSource::Fixture).unwrap();
        assert_eq!(
            r.first_mismatch,
            Some(Mismatch {
                n: 1,
                expected: 0,
                got: 3
            })
        );
        assert_eq!(r.matches, 0);

        assert!(matches!(
            check_terms(&b, SequenceId::AHalf, 4, TermSource::Fixture),
            Err(Error::InsufficientTerms { n: 4, .. })
        ));
        let wrong = parse_bfile("A213840", "1 1\n").unwrap();
        assert!(matches!(
            check_terms(&wrong, SequenceId::AHalf, 1, TermSource::Fixture),
            Err(Error::RejectedPairing { .. })
        ));
    }

    proptest! {
        #[test]
        fn format_parse_round_trip(values in proptest::collection::vec(any::<i128>(), 0..40), start in -5i64..5) {
            let terms: Vec<(i64, i128)> = values.into_iter().enumerate().map(|(k, v)| (start + k as i64, v)).collect();
            let b = BFile::new("A002417", terms).unwrap();
            prop_assert_eq!(parse_bfile("A002417", &b.to_string()).unwrap(), b);
        }
    }
}
