//! Group literal syntax: `0`, `Z`, `Z_m`, `Q`, `+` for direct sums, `^k` for
//! repetition and `^inf` for countably infinite free rank, e.g.
//! `Z_2^2 + Z_3 + Z^2`.

use std::fmt;
use std::str::FromStr;

use super::group::{AbelianGroup, FreeRank};
use crate::error::{Error, ParseError, Result};
use crate::lex::Cursor;

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rationals() {
            return f.write_str("Q");
        }
        let mut terms: Vec<String> = self
            .torsion()
            .iter()
            .map(|(pp, &k)| match k {
                1 => format!("Z_{}", pp.value()),
                _ => format!("Z_{}^{k}", pp.value()),
            })
            .collect();
        match self.free_rank() {
            Some(FreeRank::Finite(0)) | None => {}
            Some(FreeRank::Finite(1)) => terms.push("Z".into()),
            Some(FreeRank::Finite(r)) => terms.push(format!("Z^{r}")),
            Some(FreeRank::Omega) => terms.push("Z^inf".into()),
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

impl FromStr for AbelianGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_group(s)
    }
}

pub fn parse_group(text: &str) -> Result<AbelianGroup> {
    let mut cur = Cursor::new(text);
    let g = parse_group_at(&mut cur)?;
    if !cur.at_end() {
        return Err(cur.unexpected("'+' or end of group").into());
    }
    Ok(g)
}

/// Parses a sum of terms, stopping at the first character that cannot
/// continue a group literal.
pub(crate) fn parse_group_at(cur: &mut Cursor<'_>) -> Result<AbelianGroup> {
    let start = cur.pos();
    let mut acc = parse_term(cur)?;
    while cur.eat('+') {
        let term = parse_term(cur)?;
        acc = acc.direct_sum(&term).map_err(|e| located(e, start))?;
    }
    Ok(acc)
}

fn parse_term(cur: &mut Cursor<'_>) -> Result<AbelianGroup> {
    cur.skip_ws();
    let start = cur.pos();
    let base = match cur.peek() {
        Some('0') => {
            cur.bump();
            AbelianGroup::trivial()
        }
        Some('Q') => {
            cur.bump();
            AbelianGroup::rationals()
        }
        Some('Z') => {
            cur.bump();
            if cur.eat('_') {
                let (m, at) = cur.number()?;
                if m < 2 {
                    return Err(cur.error(at, "Z_m requires m >= 2").into());
                }
                AbelianGroup::cyclic(m).map_err(|e| located(e, at))?
            } else {
                AbelianGroup::free(1)
            }
        }
        Some('*') => return Err(non_abelian(start).into()),
        Some(c) if c.is_ascii_alphabetic() && cur.peek_second() == Some('_') => {
            return Err(non_abelian(start).into())
        }
        _ => return Err(cur.unexpected("a group term (0, Z, Z_m or Q)").into()),
    };
    if cur.peek() == Some('*') {
        return Err(non_abelian(cur.pos()).into());
    }
    if !cur.eat('^') {
        return Ok(base);
    }
    cur.skip_ws();
    let at = cur.pos();
    if cur.eat_word("inf") {
        return if base == AbelianGroup::free(1) {
            Ok(AbelianGroup::free_omega())
        } else {
            Err(cur
                .error(
                    at,
                    "'^inf' is only supported on Z (infinite torsion multiplicity is unsupported)",
                )
                .into())
        };
    }
    let (k, _) = cur.number()?;
    base.repeat(k).map_err(|e| located(e, start))
}

fn non_abelian(offset: usize) -> ParseError {
    ParseError::new(offset, "non-abelian groups are out of scope")
}

/// Attaches a byte offset to group-construction failures.
fn located(e: Error, offset: usize) -> Error {
    match e {
        Error::Parse(p) => Error::Parse(p),
        other => Error::Parse(ParseError::new(offset, other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fga::PrimePower;

    fn g(s: &str) -> AbelianGroup {
        parse_group(s).unwrap_or_else(|e| panic!("{s}: {e}"))
    }

    #[test]
    fn printing_is_canonical() {
        assert_eq!(g("Z^2 + Z_3 + Z_2 + Z_2").to_string(), "Z_2^2 + Z_3 + Z^2");
        assert_eq!(g("Z_9 + Z_64").to_string(), "Z_64 + Z_9");
        assert_eq!(g("Z_6").to_string(), "Z_2 + Z_3");
        assert_eq!(g("0").to_string(), "0");
        assert_eq!(g("Z^0").to_string(), "0");
        assert_eq!(g("Q").to_string(), "Q");
        assert_eq!(g("Z^inf + Z_2").to_string(), "Z_2 + Z^inf");
        assert_eq!(g(" Z_2 ^ 3 ").to_string(), "Z_2^3");
    }

    #[test]
    fn primary_parts() {
        let t = g("Z_9 + Z_64");
        let keys: Vec<PrimePower> = t.torsion().keys().copied().collect();
        assert_eq!(
            keys,
            vec![
                PrimePower::new(2, 6).unwrap(),
                PrimePower::new(3, 2).unwrap()
            ]
        );
    }

    #[test]
    fn rejects() {
        for bad in [
            "", "Z_1", "Z_0", "Q + Z", "Q^2", "Z_2^inf", "Z +", "W", "Z_2 Z_3",
        ] {
            assert!(parse_group(bad).is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn non_abelian_rejected() {
        for bad in ["F_2", "S_3", "Z * Z"] {
            let err = parse_group(bad).unwrap_err();
            assert!(err.to_string().contains("non-abelian"), "{bad}: {err}");
        }
    }

    #[test]
    fn error_offsets() {
        match parse_group("Z_2 + Z_1") {
            Err(Error::Parse(p)) => assert_eq!(p.offset, 8),
            other => panic!("unexpected {other:?}"),
        }
        match parse_group("Z + ?") {
            Err(Error::Parse(p)) => assert_eq!(p.offset, 4),
            other => panic!("unexpected {other:?}"),
        }
    }
}
