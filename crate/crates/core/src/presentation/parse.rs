use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::polynomial::{Monomial, MonomialOrder, Polynomial};
use super::{PresentationError, RingPresentation};
use crate::exact_linalg::{FieldSpec, Rationals};

pub const DEFAULT_CHARACTERISTIC: u64 = 101;
/// Exponents above this are rejected outright.
pub const MAX_EXPONENT: u32 = 4096;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Comma,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> PresentationError {
    PresentationError::Syntax {
        line,
        col,
        msg: msg.into(),
    }
}

fn tokenize(text: &str, line: usize, col0: usize) -> Result<Vec<Spanned>, PresentationError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '/' => Some(Tok::Slash),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Spanned { tok, line, col });
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let n = s.parse::<BigInt>().map_err(|_| syntax(line, col, "bad number"))?;
            out.push(Spanned { tok: Tok::Num(n), line, col });
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Spanned {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                line,
                col,
            });
        } else {
            return Err(syntax(line, col, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct PolyParser<'a> {
    toks: &'a [Spanned],
    pos: usize,
    vars: &'a [String],
    end: (usize, usize),
}

impl PolyParser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks.get(self.pos).map_or(self.end, |t| (t.line, t.col))
    }

    fn err(&self, msg: impl Into<String>) -> PresentationError {
        let (l, c) = self.here();
        syntax(l, c, msg)
    }

    fn number(&mut self) -> Result<BigInt, PresentationError> {
        match self.peek() {
            Some(Tok::Num(n)) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.err("expected a number")),
        }
    }

    fn factor(&mut self, coeff: &mut BigRational, mono: &mut Monomial) -> Result<(), PresentationError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let mut value = BigRational::from_integer(n);
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    let (l, c) = self.here();
                    let d = self.number()?;
                    if d == BigInt::from(0) {
                        return Err(syntax(l, c, "zero denominator"));
                    }
                    value /= BigRational::from_integer(d);
                }
                *coeff *= value;
                Ok(())
            }
            Some(Tok::Ident(name)) => {
                let (l, c) = self.here();
                let idx = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or(PresentationError::UnknownVariable { name: name.clone(), line: l, col: c })?;
                self.pos += 1;
                let mut exp = 1u32;
                if self.peek() == Some(&Tok::Caret) {
                    self.pos += 1;
                    let (l, c) = self.here();
                    let e = self.number()?;
                    exp = u32::try_from(&e)
                        .ok()
                        .filter(|&e| e <= MAX_EXPONENT)
                        .ok_or_else(|| syntax(l, c, format!("exponent must be at most {MAX_EXPONENT}")))?;
                }
                let e = &mut mono.0[idx];
                *e = e.checked_add(exp).filter(|&e| e <= MAX_EXPONENT).ok_or_else(|| syntax(l, c, "exponent too large"))?;
                Ok(())
            }
            _ => Err(self.err("expected a coefficient or a variable")),
        }
    }

    fn term(&mut self) -> Result<(Monomial, BigRational), PresentationError> {
        let mut coeff = BigRational::one();
        let mut mono = Monomial::one(self.vars.len());
        self.factor(&mut coeff, &mut mono)?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            self.factor(&mut coeff, &mut mono)?;
        }
        Ok((mono, coeff))
    }

    fn polynomial(&mut self) -> Result<Polynomial<BigRational>, PresentationError> {
        let mut terms = Vec::new();
        let mut negate = false;
        match self.peek() {
            Some(Tok::Minus) => {
                negate = true;
                self.pos += 1;
            }
            Some(Tok::Plus) => self.pos += 1,
            _ => {}
        }
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if negate { -c } else { c }));
            match self.peek() {
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                _ => break,
            }
            self.pos += 1;
        }
        Ok(Polynomial::from_terms(&Rationals, self.vars.len(), MonomialOrder::default(), terms))
    }
}

/// Parses the line-oriented presentation format:
///
/// ```text
/// # comment
/// char 101
/// vars x y
/// ideal x^2 - y, x*y,
///       y^2
/// ```
///
/// `char` is optional (default 101, `0` means the rationals). An `ideal`
/// line ending in a comma continues on the next line.
pub fn parse_presentation(text: &str) -> Result<RingPresentation, PresentationError> {
    let mut field: Option<FieldSpec> = None;
    let mut vars: Option<Vec<String>> = None;
    let mut ideal: Option<(Vec<Spanned>, usize)> = None;
    let mut continuing = false;
    let mut last_line = 1;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        if continuing {
            let toks = tokenize(content, line, 1)?;
            let (acc, _) = ideal.as_mut().expect("continuation follows ideal");
            continuing = matches!(toks.last(), Some(Spanned { tok: Tok::Comma, .. }));
            acc.extend(toks);
            continue;
        }
        let lead = content.len() - content.trim_start().len();
        let body = content.trim_start();
        let kw_len = body.find(char::is_whitespace).unwrap_or(body.len());
        let (kw, rest) = body.split_at(kw_len);
        let col = lead + 1;
        let rest_col = col + kw.chars().count();
        match kw {
            "char" => {
                if field.is_some() {
                    return Err(syntax(line, col, "duplicate char line"));
                }
                let value = rest.trim();
                let vcol = rest_col + (rest.len() - rest.trim_start().len());
                let p: u64 = value.parse().map_err(|_| syntax(line, vcol, "expected a characteristic"))?;
                field = Some(
                    FieldSpec::from_characteristic(p).map_err(|_| PresentationError::BadCharacteristic { p, line, col: vcol })?,
                );
            }
            "vars" => {
                if vars.is_some() {
                    return Err(syntax(line, col, "duplicate vars line"));
                }
                let mut names: Vec<String> = Vec::new();
                for tok in tokenize(rest, line, rest_col)? {
                    match tok.tok {
                        Tok::Ident(name) => {
                            if names.contains(&name) {
                                return Err(syntax(tok.line, tok.col, format!("variable {name} declared twice")));
                            }
                            names.push(name);
                        }
                        Tok::Comma => {}
                        _ => return Err(syntax(tok.line, tok.col, "expected a variable name")),
                    }
                }
                if names.is_empty() {
                    return Err(syntax(line, rest_col, "no variables declared"));
                }
                vars = Some(names);
            }
            "ideal" => {
                if ideal.is_some() {
                    return Err(syntax(line, col, "duplicate ideal line"));
                }
                if vars.is_none() {
                    return Err(syntax(line, col, "ideal before vars"));
                }
                let toks = tokenize(rest, line, rest_col)?;
                continuing = matches!(toks.last(), Some(Spanned { tok: Tok::Comma, .. }));
                ideal = Some((toks, line));
            }
            _ => return Err(syntax(line, col, format!("unknown directive '{kw}'"))),
        }
    }

    let vars = vars.ok_or_else(|| syntax(last_line, 1, "missing vars line"))?;
    let (toks, _) = ideal.ok_or_else(|| syntax(last_line, 1, "missing ideal line"))?;
    let mut parser = PolyParser {
        toks: &toks,
        pos: 0,
        vars: &vars,
        end: (last_line, 1),
    };
    let mut generators = Vec::new();
    if !toks.is_empty() {
        loop {
            generators.push(parser.polynomial()?);
            match parser.peek() {
                None => break,
                Some(Tok::Comma) => {
                    parser.pos += 1;
                    if parser.peek().is_none() {
                        return Err(parser.err("trailing comma"));
                    }
                }
                Some(_) => return Err(parser.err("expected ',' or '+'/'-'")),
            }
        }
    }
    Ok(RingPresentation {
        field: field.unwrap_or(FieldSpec::Prime(DEFAULT_CHARACTERISTIC as u32)),
        vars,
        generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_case() {
        let p = parse_presentation("char 101\nvars x\nideal x^2\n").unwrap();
        assert_eq!(p.field, FieldSpec::Prime(101));
        assert_eq!(p.vars, vec!["x"]);
        assert_eq!(p.generators.len(), 1);
        assert_eq!(p.generators[0].terms()[0].0, Monomial(vec![2]));
    }

    #[test]
    fn three_generators_and_continuation() {
        let p = parse_presentation("char 101\nvars x y\nideal x^2, x*y,\n  y^2 # done\n").unwrap();
        assert_eq!(p.generators.len(), 3);
        assert_eq!(p.generators[1].terms()[0].0, Monomial(vec![1, 1]));
    }

    #[test]
    fn unknown_variable() {
        let err = parse_presentation("vars x\nideal x^2 - y").unwrap_err();
        assert_eq!(
            err,
            PresentationError::UnknownVariable {
                name: "y".into(),
                line: 2,
                col: 13
            }
        );
    }

    #[test]
    fn non_prime_characteristic() {
        assert!(matches!(
            parse_presentation("char 12\nvars x\nideal x^2"),
            Err(PresentationError::BadCharacteristic { p: 12, line: 1, col: 6 })
        ));
    }

    #[test]
    fn coefficients_and_signs() {
        let p = parse_presentation("char 0\nvars x y\nideal -3/2*x*y + 2*y^2 - x^2 + x*y").unwrap();
        assert_eq!(p.field, FieldSpec::Rationals);
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(
            p.generators[0].terms(),
            &[(Monomial(vec![2, 0]), q(-1, 1)), (Monomial(vec![1, 1]), q(-1, 2)), (Monomial(vec![0, 2]), q(2, 1))]
        );
        assert!(parse_presentation("vars x\nideal 2 x").is_err());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_presentation("vars x\nideal x^^2").unwrap_err();
        assert!(matches!(err, PresentationError::Syntax { line: 2, col: 9, .. }), "{err:?}");
        assert!(parse_presentation("vars x\nideal x,").is_err());
        assert!(parse_presentation("vars x\nfoo x").is_err());
        assert!(parse_presentation("ideal x").is_err());
        assert!(parse_presentation("vars x x\nideal x").is_err());
    }
}
