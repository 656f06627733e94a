//! Total parsers for the textual forms the CLI accepts: alphas, sequence
//! specs, factor words, morphisms, and b-files. Nothing here panics;
//! malformed input comes back as a typed error.

use std::collections::BTreeMap;
use std::num::IntErrorKind;

use thiserror::Error;

use crate::gbs::{Gbs, GbsError};
use crate::quad::{QuadError, QuadraticIrrational};
use crate::words::{Letter, Morphism, Word, WordError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("malformed {what}: {input:?}")]
    Malformed { what: &'static str, input: String },
    #[error("integer out of range in {what}: {input:?}")]
    Overflow { what: &'static str, input: String },
    #[error(transparent)]
    Quad(#[from] QuadError),
    #[error(transparent)]
    Gbs(#[from] GbsError),
    #[error(transparent)]
    Word(#[from] WordError),
}

fn int(s: &str, what: &'static str) -> Result<i64, ParseError> {
    let t = s.trim();
    t.parse::<i64>().map_err(|e| match e.kind() {
        IntErrorKind::PosOverflow | IntErrorKind::NegOverflow => {
            ParseError::Overflow { what, input: t.to_string() }
        }
        _ => ParseError::Malformed { what, input: t.to_string() },
    })
}

fn index(s: &str, what: &'static str) -> Result<u64, ParseError> {
    let t = s.trim();
    t.parse::<u64>().map_err(|e| match e.kind() {
        IntErrorKind::PosOverflow => ParseError::Overflow { what, input: t.to_string() },
        _ => ParseError::Malformed { what, input: t.to_string() },
    })
}

/// Accepts `golden`, `sqrt:<d>`, or `quad:<a>,<b>,<c>,<d>` for
/// (a + b sqrt(d)) / c.
pub fn parse_alpha(s: &str) -> Result<QuadraticIrrational, ParseError> {
    let t = s.trim();
    if t == "golden" {
        return Ok(QuadraticIrrational::golden());
    }
    if let Some(d) = t.strip_prefix("sqrt:") {
        return Ok(QuadraticIrrational::sqrt(int(d, "radicand")?)?);
    }
    if let Some(rest) = t.strip_prefix("quad:") {
        let parts: Vec<&str> = rest.split(',').collect();
        if parts.len() != 4 {
            return Err(ParseError::Malformed { what: "alpha", input: t.to_string() });
        }
        let a = int(parts[0], "alpha numerator")?;
        let b = int(parts[1], "alpha coefficient")?;
        let c = int(parts[2], "alpha denominator")?;
        let d = int(parts[3], "alpha radicand")?;
        return Ok(QuadraticIrrational::new(a, b, c, d)?);
    }
    Err(ParseError::Malformed { what: "alpha", input: t.to_string() })
}

/// Accepts `p,q,r` with an optional `#start` suffix; the start index
/// defaults to 1 when absent.
pub fn parse_triple(s: &str) -> Result<(i64, i64, i64, u64), ParseError> {
    let t = s.trim();
    let (body, start) = match t.split_once('#') {
        Some((body, tail)) => (body, index(tail, "start index")?),
        None => (t, 1),
    };
    let parts: Vec<&str> = body.split(',').collect();
    if parts.len() != 3 {
        return Err(ParseError::Malformed { what: "coefficient triple", input: t.to_string() });
    }
    Ok((
        int(parts[0], "coefficient")?,
        int(parts[1], "coefficient")?,
        int(parts[2], "coefficient")?,
        start,
    ))
}

/// Accepts the full sequence form `gbs:<p>,<q>,<r>@<alpha>[#<start>]`.
/// Round-trips with the Display impl of Gbs.
pub fn parse_gbs(s: &str) -> Result<Gbs, ParseError> {
    let t = s.trim();
    let malformed = || ParseError::Malformed { what: "gbs", input: t.to_string() };
    let rest = t.strip_prefix("gbs:").ok_or_else(malformed)?;
    let (coeffs, tail) = rest.split_once('@').ok_or_else(malformed)?;
    let (alpha_text, start) = match tail.split_once('#') {
        Some((alpha_text, st)) => (alpha_text, index(st, "start index")?),
        None => (tail, 1),
    };
    let parts: Vec<&str> = coeffs.split(',').collect();
    if parts.len() != 3 {
        return Err(malformed());
    }
    let p = int(parts[0], "coefficient")?;
    let q = int(parts[1], "coefficient")?;
    let r = int(parts[2], "coefficient")?;
    let alpha = parse_alpha(alpha_text)?;
    Ok(Gbs::new(p, q, r, alpha, start)?)
}

/// Accepts a plain digit string such as `00100`.
pub fn parse_word(s: &str) -> Result<Word, ParseError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(ParseError::Word(WordError::EmptyWord));
    }
    Ok(Word::from_digits(t)?)
}

/// Accepts rules of the form `0>01;1>011` over single-digit letters.
/// The morphism must be non-erasing and each letter may appear once.
pub fn parse_morphism(s: &str) -> Result<Morphism, ParseError> {
    let t = s.trim();
    let mut images: BTreeMap<Letter, Word> = BTreeMap::new();
    for rule in t.split(';') {
        let malformed = || ParseError::Malformed { what: "morphism rule", input: rule.to_string() };
        let (lhs, rhs) = rule.split_once('>').ok_or_else(malformed)?;
        let letter_word = Word::from_digits(lhs.trim())?;
        if letter_word.len() != 1 {
            return Err(malformed());
        }
        let letter = letter_word.letters()[0];
        let image = Word::from_digits(rhs.trim())?;
        if images.insert(letter, image).is_some() {
            return Err(ParseError::Malformed { what: "morphism (duplicate rule)", input: t.to_string() });
        }
    }
    Ok(Morphism::new(images)?)
}

/// Parses b-file text: one `index value` pair per line, blank lines and
/// `#` comments skipped.
pub fn parse_bfile(text: &str) -> Result<Vec<(u64, i64)>, ParseError> {
    let mut terms = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        match (fields.next(), fields.next(), fields.next()) {
            (Some(n), Some(v), None) => {
                terms.push((index(n, "b-file index")?, int(v, "b-file value")?));
            }
            _ => {
                return Err(ParseError::Malformed { what: "b-file line", input: line.to_string() });
            }
        }
    }
    Ok(terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_forms() {
        assert_eq!(parse_alpha("golden").unwrap(), QuadraticIrrational::golden());
        assert_eq!(parse_alpha("sqrt:2").unwrap(), QuadraticIrrational::sqrt(2).unwrap());
        assert_eq!(parse_alpha(" sqrt:8 ").unwrap(), QuadraticIrrational::sqrt(8).unwrap());
        assert_eq!(
            parse_alpha("quad:1,1,2,5").unwrap(),
            QuadraticIrrational::golden()
        );
        assert_eq!(parse_alpha("sqrt:4"), Err(ParseError::Quad(QuadError::Rational)));
        assert!(matches!(parse_alpha("pi"), Err(ParseError::Malformed { .. })));
        assert!(matches!(parse_alpha("quad:1,2,3"), Err(ParseError::Malformed { .. })));
        assert!(matches!(
            parse_alpha("sqrt:99999999999999999999"),
            Err(ParseError::Overflow { .. })
        ));
    }

    #[test]
    fn alpha_round_trips_through_display() {
        for text in ["golden", "sqrt:2", "sqrt:8", "quad:3,-1,1,5"] {
            let alpha = parse_alpha(text).unwrap();
            assert_eq!(parse_alpha(&alpha.to_string()).unwrap(), alpha);
        }
    }

    #[test]
    fn triples() {
        assert_eq!(parse_triple("1,4,0").unwrap(), (1, 4, 0, 1));
        assert_eq!(parse_triple("5,-7,3#1").unwrap(), (5, -7, 3, 1));
        assert_eq!(parse_triple("5,4,3#0").unwrap(), (5, 4, 3, 0));
        assert!(matches!(parse_triple("1,2"), Err(ParseError::Malformed { .. })));
        assert!(matches!(parse_triple("1,2,3#x"), Err(ParseError::Malformed { .. })));
    }

    #[test]
    fn gbs_round_trips_through_display() {
        for text in [
            "gbs:1,0,0@golden#1",
            "gbs:5,-7,3@golden#1",
            "gbs:1,4,0@sqrt:8#1",
            "gbs:2,1,-1@sqrt:2#0",
        ] {
            let g = parse_gbs(text).unwrap();
            assert_eq!(g.to_string(), text);
            assert_eq!(parse_gbs(&g.to_string()).unwrap(), g);
        }
    }

    #[test]
    fn gbs_defaults_and_errors() {
        let g = parse_gbs("gbs:2,-1,2@golden").unwrap();
        assert_eq!(g.start(), 1);
        assert!(matches!(parse_gbs("2,-1,2@golden"), Err(ParseError::Malformed { .. })));
        assert!(matches!(parse_gbs("gbs:2,-1@golden"), Err(ParseError::Malformed { .. })));
        assert_eq!(
            parse_gbs("gbs:1,0,0@golden#2"),
            Err(ParseError::Gbs(GbsError::StartOutOfRange(2)))
        );
    }

    #[test]
    fn words_and_morphisms() {
        assert_eq!(parse_word("00100").unwrap(), Word::new(vec![0, 0, 1, 0, 0]));
        assert_eq!(parse_word(""), Err(ParseError::Word(WordError::EmptyWord)));
        assert!(matches!(parse_word("01a"), Err(ParseError::Word(_))));

        let g = parse_morphism("0>01;1>011").unwrap();
        let image = g.apply(&Word::new(vec![0, 1])).unwrap();
        assert_eq!(image, Word::new(vec![0, 1, 0, 1, 1]));
        assert_eq!(
            parse_morphism("0>01;1>"),
            Err(ParseError::Word(WordError::ErasingImage(1)))
        );
        assert!(matches!(parse_morphism("0>1;0>0"), Err(ParseError::Malformed { .. })));
        assert!(matches!(parse_morphism("01>1"), Err(ParseError::Malformed { .. })));
    }

    #[test]
    fn bfiles() {
        assert_eq!(parse_bfile("1 1\n2 3\n3 4\n").unwrap(), vec![(1, 1), (2, 3), (3, 4)]);
        assert_eq!(
            parse_bfile("# comment\n\n1 -5\n").unwrap(),
            vec![(1, -5)]
        );
        assert!(matches!(parse_bfile("1 2 3\n"), Err(ParseError::Malformed { .. })));
        assert!(matches!(parse_bfile("x 2\n"), Err(ParseError::Malformed { .. })));
    }
}
