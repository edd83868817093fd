//! The polynomial text grammar.
//!
//! ```text
//! expr  ::= ['-'] term (('+'|'-') term)*
//! term  ::= [coef]['*'] monom | coef
//! monom ::= var('^'int)?('*'var('^'int)?)*
//! var   ::= x0 | x1 | x2 | x3 | x | y | z
//! coef  ::= int | int'/'int
//! ```
//!
//! Whitespace is insignificant. x0..x3 select the projective ring (4
//! variables), x,y,z the affine one (3); mixing them is an error. The
//! formatter emits canonical text that reparses to an equal polynomial.

use super::{Monomial, MonomialOrder, Poly, PolyError};
use crate::field::Field;

const PROJ_NAMES: [&str; 4] = ["x0", "x1", "x2", "x3"];
const AFF_NAMES: [&str; 3] = ["x", "y", "z"];

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Var(usize, bool), // index, projective?
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    End,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Result<Tok, PolyError> {
        let save = self.pos;
        let t = self.next()?;
        self.pos = save;
        Ok(t.0)
    }

    /// Returns the token and its starting byte offset.
    fn next(&mut self) -> Result<(Tok, usize), PolyError> {
        self.skip_ws();
        let start = self.pos;
        if self.pos >= self.src.len() {
            return Ok((Tok::End, start));
        }
        let c = self.src[self.pos];
        let tok = match c {
            b'+' => {
                self.pos += 1;
                Tok::Plus
            }
            b'-' => {
                self.pos += 1;
                Tok::Minus
            }
            b'*' => {
                self.pos += 1;
                Tok::Star
            }
            b'^' => {
                self.pos += 1;
                Tok::Caret
            }
            b'/' => {
                self.pos += 1;
                Tok::Slash
            }
            b'0'..=b'9' => {
                let mut s = String::new();
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    s.push(self.src[self.pos] as char);
                    self.pos += 1;
                }
                Tok::Int(s)
            }
            b'x' => {
                self.pos += 1;
                if self.pos < self.src.len() && (b'0'..=b'3').contains(&self.src[self.pos]) {
                    let idx = (self.src[self.pos] - b'0') as usize;
                    self.pos += 1;
                    if self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                        return Err(PolyError::UnknownVariable(
                            String::from_utf8_lossy(&self.src[start..=self.pos]).into_owned(),
                        ));
                    }
                    Tok::Var(idx, true)
                } else {
                    Tok::Var(0, false)
                }
            }
            b'y' => {
                self.pos += 1;
                Tok::Var(1, false)
            }
            b'z' => {
                self.pos += 1;
                Tok::Var(2, false)
            }
            other => {
                return Err(PolyError::Syntax {
                    pos: start,
                    msg: format!("unexpected character {:?}", other as char),
                })
            }
        };
        Ok((tok, start))
    }
}

type RawCoef = Option<(String, Option<String>)>;
type RawTerm = (bool, RawCoef, Vec<(usize, bool, u16)>);

/// Parses grammar text over the given field. `default_nvars` decides the
/// ring when the text uses no variables at all (a bare constant).
pub fn parse_poly<F: Field>(
    field: &F,
    text: &str,
    default_nvars: usize,
) -> Result<Poly<F>, PolyError> {
    assert!(default_nvars == 3 || default_nvars == 4);
    let mut lx = Lexer::new(text);
    let mut items: Vec<RawTerm> = vec![];
    let mut pending_neg = false;
    loop {
        match lx.peek()? {
            Tok::End => break,
            Tok::Minus => {
                let (_, pos) = lx.next()?;
                if pending_neg {
                    return Err(PolyError::Syntax { pos, msg: "doubled sign".into() });
                }
                pending_neg = true;
                continue;
            }
            Tok::Plus => {
                let (_, pos) = lx.next()?;
                if items.is_empty() || pending_neg {
                    return Err(PolyError::Syntax { pos, msg: "unexpected '+'".into() });
                }
                continue;
            }
            _ => {}
        }
        items.push(parse_term(&mut lx, pending_neg)?);
        pending_neg = false;
        match lx.peek()? {
            Tok::Plus | Tok::Minus | Tok::End => {}
            _ => {
                let (_, pos) = lx.next()?;
                return Err(PolyError::Syntax { pos, msg: "expected '+' or '-'".into() });
            }
        }
    }
    if items.is_empty() {
        return Err(PolyError::Syntax { pos: 0, msg: "empty input".into() });
    }
    if pending_neg {
        return Err(PolyError::Syntax { pos: text.len(), msg: "dangling sign".into() });
    }
    assemble(field, default_nvars, items)
}

fn parse_term(lx: &mut Lexer, negative: bool) -> Result<RawTerm, PolyError> {
    let mut coef: RawCoef = None;
    let mut vars: Vec<(usize, bool, u16)> = vec![];
    match lx.peek()? {
        Tok::Int(_) => {
            let num = match lx.next()? {
                (Tok::Int(s), _) => s,
                _ => unreachable!(),
            };
            let den = if lx.peek()? == Tok::Slash {
                lx.next()?;
                match lx.next()? {
                    (Tok::Int(s), _) => Some(s),
                    (_, pos) => {
                        return Err(PolyError::Syntax { pos, msg: "expected an integer".into() })
                    }
                }
            } else {
                None
            };
            coef = Some((num, den));
            // optional '*' then optional monomial; bare adjacency "3x0" also ok
            match lx.peek()? {
                Tok::Star => {
                    lx.next()?;
                    parse_monom(lx, &mut vars, true)?;
                }
                Tok::Var(..) => parse_monom(lx, &mut vars, true)?,
                _ => {}
            }
        }
        Tok::Var(..) => parse_monom(lx, &mut vars, true)?,
        _ => {
            let (_, pos) = lx.next()?;
            return Err(PolyError::Syntax { pos, msg: "expected a term".into() });
        }
    }
    Ok((negative, coef, vars))
}

fn parse_monom(
    lx: &mut Lexer,
    vars: &mut Vec<(usize, bool, u16)>,
    first_required: bool,
) -> Result<(), PolyError> {
    let mut need = first_required;
    loop {
        match lx.peek()? {
            Tok::Var(idx, proj) => {
                lx.next()?;
                let mut exp = 1u16;
                if lx.peek()? == Tok::Caret {
                    lx.next()?;
                    match lx.next()? {
                        (Tok::Int(s), pos) => {
                            exp = s.parse::<u16>().map_err(|e| PolyError::Syntax {
                                pos,
                                msg: format!("bad exponent: {e}"),
                            })?;
                        }
                        (_, pos) => {
                            return Err(PolyError::Syntax {
                                pos,
                                msg: "expected an exponent".into(),
                            })
                        }
                    }
                }
                vars.push((idx, proj, exp));
                need = false;
                // a following '*' continues the monomial only if a variable
                // comes next
                let save = lx.pos;
                if lx.peek()? == Tok::Star {
                    lx.next()?;
                    if matches!(lx.peek()?, Tok::Var(..)) {
                        continue;
                    }
                    lx.pos = save;
                }
                return Ok(());
            }
            _ => {
                if need {
                    let (_, pos) = lx.next()?;
                    return Err(PolyError::Syntax { pos, msg: "expected a variable".into() });
                }
                return Ok(());
            }
        }
    }
}

fn assemble<F: Field>(
    field: &F,
    default_nvars: usize,
    items: Vec<RawTerm>,
) -> Result<Poly<F>, PolyError> {
    let mut proj_seen = false;
    let mut aff_seen = false;
    for (_, _, vars) in &items {
        for (_, proj, _) in vars {
            if *proj {
                proj_seen = true;
            } else {
                aff_seen = true;
            }
        }
    }
    if proj_seen && aff_seen {
        return Err(PolyError::MixedVariables);
    }
    let nvars = if proj_seen {
        4
    } else if aff_seen {
        3
    } else {
        default_nvars
    };
    let mut terms = vec![];
    for (negative, coef, vars) in items {
        let mut c = match coef {
            None => field.one(),
            Some((num, den)) => {
                let s = match den {
                    None => num,
                    Some(d) => format!("{num}/{d}"),
                };
                field
                    .parse_scalar(&s)
                    .map_err(|e| PolyError::Syntax { pos: 0, msg: e.to_string() })?
            }
        };
        if negative {
            c = field.neg(&c);
        }
        let mut e = [0u16; super::MAX_VARS];
        for (idx, _, exp) in vars {
            e[idx] += exp;
        }
        terms.push((Monomial { e }, c));
    }
    Ok(Poly::from_terms(field, nvars, MonomialOrder::GrevLex, terms))
}

/// Canonical text form; reparses to an equal polynomial.
pub fn format_poly<F: Field>(p: &Poly<F>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let names: &[&str] = if p.nvars() == 4 { &PROJ_NAMES } else { &AFF_NAMES };
    let field = p.field();
    let mut out = String::new();
    for (i, (m, c)) in p.terms().iter().enumerate() {
        let mut cs = field.fmt_elem(c);
        let neg = cs.starts_with('-');
        if neg {
            cs = cs[1..].to_string();
        }
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = (0..p.nvars())
            .filter(|&v| m.e[v] > 0)
            .map(|v| {
                if m.e[v] == 1 {
                    names[v].to_string()
                } else {
                    format!("{}^{}", names[v], m.e[v])
                }
            })
            .collect::<Vec<_>>()
            .join("*");
        if mono.is_empty() {
            out.push_str(&cs);
        } else if cs == "1" {
            out.push_str(&mono);
        } else {
            out.push_str(&cs);
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}
