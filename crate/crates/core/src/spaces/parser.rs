//! Recursive-descent parser for space expressions.
//!
//! ```text
//! wedge   := product ('v' product)*
//! product := unary ('x' unary)*
//! unary   := 'pt' | 'S^' n | 'T^' k | 'P_' q
//!          | 'M(' group ',' n ')' | 'K(' group ',' n ')'
//!          | 'susp' ['^' t] '(' wedge ')' | '(' wedge ')'
//! ```

use super::ast::{moore_degree_message, SpaceExpr};
use crate::error::{ParseError, Result};
use crate::fga::parse_group_at;
use crate::lex::Cursor;

pub fn parse(text: &str) -> Result<SpaceExpr> {
    let mut cur = Cursor::new(text);
    let e = wedge(&mut cur)?;
    if !cur.at_end() {
        return Err(cur.unexpected("'v', 'x' or end of input").into());
    }
    Ok(e)
}

fn wedge(cur: &mut Cursor<'_>) -> Result<SpaceExpr> {
    let mut parts = vec![product(cur)?];
    while cur.eat('v') {
        parts.push(product(cur)?);
    }
    Ok(SpaceExpr::wedge_of(parts))
}

fn product(cur: &mut Cursor<'_>) -> Result<SpaceExpr> {
    let mut parts = vec![unary(cur)?];
    while cur.eat('x') {
        parts.push(unary(cur)?);
    }
    Ok(SpaceExpr::product_of(parts))
}

fn unary(cur: &mut Cursor<'_>) -> Result<SpaceExpr> {
    cur.skip_ws();
    if cur.eat('(') {
        let e = wedge(cur)?;
        cur.expect(')')?;
        return Ok(e);
    }
    if cur.eat_word("pt") {
        return Ok(SpaceExpr::Point);
    }
    if cur.eat_word("susp") {
        let times = if cur.eat('^') {
            positive(cur, "suspension count")?
        } else {
            1
        };
        cur.expect('(')?;
        let inner = wedge(cur)?;
        cur.expect(')')?;
        return Ok(SpaceExpr::Suspension {
            times,
            inner: Box::new(inner),
        });
    }
    match cur.peek() {
        Some('S') => {
            cur.bump();
            cur.expect('^')?;
            Ok(SpaceExpr::Sphere(positive(cur, "sphere dimension")?))
        }
        Some('T') => {
            cur.bump();
            cur.expect('^')?;
            Ok(SpaceExpr::Torus(positive(cur, "torus dimension")?))
        }
        Some('P') => {
            cur.bump();
            cur.expect('_')?;
            let (q, _) = cur.number()?;
            Ok(SpaceExpr::PseudoProjective(q))
        }
        Some(c @ ('M' | 'K')) => {
            cur.bump();
            cur.expect('(')?;
            let group = parse_group_at(cur)?;
            cur.expect(',')?;
            let (degree, at) = degree(cur)?;
            cur.expect(')')?;
            if c == 'M' {
                if degree < 2 {
                    return Err(ParseError::new(at, moore_degree_message(degree)).into());
                }
                Ok(SpaceExpr::Moore { group, degree })
            } else {
                if degree < 1 {
                    return Err(ParseError::new(at, "K(G, n) requires n >= 1").into());
                }
                Ok(SpaceExpr::Em { group, degree })
            }
        }
        _ => Err(cur
            .unexpected("a space (pt, S^n, M(..), K(..), T^k, P_q, susp, '(')")
            .into()),
    }
}

fn degree(cur: &mut Cursor<'_>) -> Result<(u32, usize), ParseError> {
    let (n, at) = cur.number()?;
    let n = u32::try_from(n).map_err(|_| ParseError::new(at, "degree is too large"))?;
    Ok((n, at))
}

fn positive(cur: &mut Cursor<'_>, what: &str) -> Result<u32, ParseError> {
    let (n, at) = degree(cur)?;
    if n == 0 {
        return Err(ParseError::new(at, format!("{what} must be at least 1")));
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::fga::parse_group;

    #[test]
    fn basic_wedge() {
        assert_eq!(
            parse("S^2 v S^5").unwrap(),
            SpaceExpr::Wedge(vec![SpaceExpr::Sphere(2), SpaceExpr::Sphere(5)])
        );
    }

    #[test]
    fn moore_group_is_canonical() {
        let e = parse("M(Z_9 + Z_64, 2)").unwrap();
        assert_eq!(
            e,
            SpaceExpr::Moore {
                group: parse_group("Z_64 + Z_9").unwrap(),
                degree: 2
            }
        );
    }

    #[test]
    fn moore_degree_one_rejected() {
        match parse("M(Z, 1)") {
            Err(Error::Parse(p)) => {
                assert_eq!(p.offset, 5);
                assert!(p.message.contains("degree n >= 2"), "{}", p.message);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn precedence() {
        let e = parse("S^1 x S^2 v T^2").unwrap();
        assert_eq!(
            e,
            SpaceExpr::Wedge(vec![
                SpaceExpr::Product(vec![SpaceExpr::Sphere(1), SpaceExpr::Sphere(2)]),
                SpaceExpr::Torus(2),
            ])
        );
        let e = parse("S^1 x (S^2 v T^2)").unwrap();
        assert!(matches!(e, SpaceExpr::Product(ref v) if matches!(v[1], SpaceExpr::Wedge(_))));
    }

    #[test]
    fn suspension_forms() {
        assert_eq!(
            parse("susp^3(P_2 v P_0)").unwrap(),
            SpaceExpr::Suspension {
                times: 3,
                inner: Box::new(SpaceExpr::Wedge(vec![
                    SpaceExpr::PseudoProjective(2),
                    SpaceExpr::PseudoProjective(0)
                ]))
            }
        );
        assert_eq!(parse("susp(pt)").unwrap(), SpaceExpr::Point.suspend(1));
    }

    #[test]
    fn whitespace_insensitive() {
        assert_eq!(
            parse("  K( Z_6 ,2 )x  S^1").unwrap(),
            parse("K(Z_6, 2) x S^1").unwrap()
        );
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        let cases = [
            ("S^2 v", 5),
            ("S^0", 2),
            ("M(Z_2 2)", 6),
            ("S^2 S^3", 4),
            ("Q(Z, 2)", 0),
            ("K(F_2, 1)", 2),
        ];
        for (text, offset) in cases {
            match parse(text) {
                Err(Error::Parse(p)) => assert_eq!(p.offset, offset, "{text}: {}", p.message),
                other => panic!("{text}: unexpected {other:?}"),
            }
        }
    }
}
