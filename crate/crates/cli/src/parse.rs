//! Expressions over `K[X^{±1}; θ]` with central denominators.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := atom ('^' uint)?
//! atom   := uint | 'g' | 'X' | 'Y' | '(' expr ')'
//! ```
//!
//! Products keep their operand order. A divisor must not mention `X` and
//! must evaluate to a nonzero element of `F(Y)`.

use skewres_core::fractions::SkewFrac;
use skewres_core::skew_ring::SkewPoly;
use skewres_core::{Fe, Tower};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(u64),
    Gen,
    X,
    Y,
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Pow(Box<Expr>, u32),
}

impl Expr {
    fn mentions_x(&self) -> bool {
        match self {
            Expr::X => true,
            Expr::Int(_) | Expr::Gen | Expr::Y => false,
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b, _) => {
                a.mentions_x() || b.mentions_x()
            }
            Expr::Pow(a, _) => a.mentions_x(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Ident(char),
    Op(char),
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

fn lex(text: &str) -> Result<Lexer, CliError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let mut n: u64 = 0;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                n = n
                    .checked_mul(10)
                    .and_then(|n| n.checked_add(chars[i].1 as u64 - '0' as u64))
                    .ok_or_else(|| CliError::syntax(pos, "integer literal too large"))?;
                i += 1;
            }
            toks.push((Tok::Int(n), pos));
        } else if "+-*/^()".contains(c) {
            toks.push((Tok::Op(c), pos));
            i += 1;
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().map(|&(_, c)| c).collect();
            match word.as_str() {
                "g" | "X" | "Y" => toks.push((Tok::Ident(word.chars().next().unwrap()), pos)),
                _ => return Err(CliError::UnknownSymbol { symbol: word, position: pos }),
            }
        } else {
            return Err(CliError::syntax(pos, format!("unexpected character '{c}'")));
        }
    }
    toks.push((Tok::End, text.len()));
    Ok(Lexer { toks, at: 0 })
}

impl Lexer {
    fn peek(&self) -> (Tok, usize) {
        self.toks[self.at]
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at];
        if t.0 != Tok::End {
            self.at += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Expr, CliError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek().0 {
                Tok::Op('+') => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Op('-') => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, CliError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                (Tok::Op('*'), _) => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                (Tok::Op('/'), pos) => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?), pos);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, CliError> {
        let base = self.atom()?;
        if self.peek().0 != Tok::Op('^') {
            return Ok(base);
        }
        self.bump();
        match self.bump() {
            (Tok::Int(n), pos) => {
                let e = u32::try_from(n).map_err(|_| CliError::syntax(pos, "exponent too large"))?;
                Ok(Expr::Pow(Box::new(base), e))
            }
            (t, pos) => {
                Err(CliError::syntax(pos, format!("expected a nonnegative integer exponent, found {}", describe(t))))
            }
        }
    }

    fn atom(&mut self) -> Result<Expr, CliError> {
        match self.bump() {
            (Tok::Int(n), _) => Ok(Expr::Int(n)),
            (Tok::Ident('g'), _) => Ok(Expr::Gen),
            (Tok::Ident('X'), _) => Ok(Expr::X),
            (Tok::Ident('Y'), _) => Ok(Expr::Y),
            (Tok::Op('('), _) => {
                let inner = self.expr()?;
                match self.bump() {
                    (Tok::Op(')'), _) => Ok(inner),
                    (t, pos) => Err(CliError::syntax(pos, format!("expected ')', found {}", describe(t)))),
                }
            }
            (t, pos) => Err(CliError::syntax(pos, format!("expected an operand, found {}", describe(t)))),
        }
    }
}

fn describe(t: Tok) -> String {
    match t {
        Tok::Int(n) => format!("'{n}'"),
        Tok::Ident(c) | Tok::Op(c) => format!("'{c}'"),
        Tok::End => "end of input".into(),
    }
}

/// Parses `text` into a syntax tree.
pub fn parse_expr(text: &str) -> Result<Expr, CliError> {
    let mut lx = lex(text)?;
    let e = lx.expr()?;
    match lx.peek() {
        (Tok::End, _) => Ok(e),
        (t, pos) => Err(CliError::syntax(pos, format!("unexpected {}", describe(t)))),
    }
}

/// Evaluates a syntax tree in the fraction field.
pub fn eval(e: &Expr, k: &Tower) -> Result<SkewFrac, CliError> {
    Ok(match e {
        Expr::Int(n) => SkewFrac::from_skew(SkewPoly::constant(k.from_int((*n % k.p() as u64) as i64))),
        Expr::Gen => SkewFrac::from_skew(SkewPoly::constant(k.gen())),
        Expr::X => SkewFrac::from_skew(SkewPoly::x()),
        Expr::Y => SkewFrac::from_skew(SkewPoly::monomial(Fe::ONE, k.r() as i64)),
        Expr::Add(a, b) => eval(a, k)?.add(&eval(b, k)?, k),
        Expr::Sub(a, b) => eval(a, k)?.sub(&eval(b, k)?, k),
        Expr::Mul(a, b) => eval(a, k)?.mul(&eval(b, k)?, k),
        Expr::Pow(a, n) => eval(a, k)?.pow(*n as i64, k)?,
        Expr::Div(a, b, pos) => {
            let d = eval(b, k)?;
            if b.mentions_x() || d.to_central(k).is_none() {
                return Err(CliError::NonCentralDenominator { position: *pos });
            }
            if d.is_zero() {
                return Err(CliError::Math(skewres_core::Error::DivisionByZero));
            }
            eval(a, k)?.div(&d, k)?
        }
    })
}

/// Parses and evaluates.
pub fn parse(text: &str, k: &Tower) -> Result<SkewFrac, CliError> {
    eval(&parse_expr(text)?, k)
}

/// Parses a skew polynomial (no denominator, no negative powers of `X`).
pub fn parse_poly(text: &str, k: &Tower) -> Result<SkewPoly, CliError> {
    let f = parse(text, k)?;
    if !f.den().is_one() || !f.num().is_polynomial() {
        return Err(CliError::Math(skewres_core::Error::NotPolynomial));
    }
    Ok(f.num().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use skewres_core::FieldConfig;

    fn k25() -> Tower {
        Tower::new(FieldConfig::gf25()).unwrap()
    }

    #[test]
    fn products_keep_order() {
        let k = k25();
        let f = parse_poly("X*g", &k).unwrap();
        assert_eq!(f, SkewPoly::monomial(k.frob(k.gen(), 1), 1));
        let f = parse_poly("g*X^2 + X + 1", &k).unwrap();
        assert_eq!(f, SkewPoly::from_coeffs(vec![Fe::ONE, Fe::ONE, k.gen()]));
    }

    #[test]
    fn central_division() {
        let k = k25();
        let f = parse("X / (Y - 1)", &k).unwrap();
        assert_eq!(f.num(), &SkewPoly::x());
        assert_eq!(f.den(), &skewres_core::poly::Poly::linear(Fe::ONE, &k));
    }

    #[test]
    fn errors_carry_positions() {
        let k = k25();
        assert_eq!(parse("X + * 2", &k).unwrap_err(), CliError::syntax(4, "expected an operand, found '*'"));
        assert_eq!(parse("X + h", &k).unwrap_err(), CliError::UnknownSymbol { symbol: "h".into(), position: 4 });
        assert_eq!(parse("1/X", &k).unwrap_err(), CliError::NonCentralDenominator { position: 1 });
        assert_eq!(parse("1/g", &k).unwrap_err(), CliError::NonCentralDenominator { position: 1 });
        assert!(matches!(parse("(X", &k), Err(CliError::Syntax { position: 2, .. })));
        assert!(matches!(parse("X^", &k), Err(CliError::Syntax { position: 2, .. })));
    }
}
