//! Linear-fractional objectives `(a·k + b·ℓ + c)/(d·k + e·ℓ + f)` and linear
//! constraints, with a small recursive-descent parser.

use std::fmt;

use num_traits::{One, Zero};

use super::{parse_decimal, CalcError, ExponentPair, Rational};
use crate::format;

pub const OBJECTIVE_GRAMMAR: &str = "\
objective  := expr                      (must reduce to linear / linear)
constraint := expr REL expr             REL is one of < <= > >= = (also ≤ ≥)
expr       := term (('+' | '-') term)*
term       := unary (('*' | '/') unary | unary)*   juxtaposition multiplies: 5k, 2(k+l)
unary      := ('+' | '-') unary | power
power      := atom ('^' INTEGER)?
atom       := NUMBER | 'k' | 'l' | 'ℓ' | '(' expr ')'
NUMBER     := digits ('.' digits)?
examples   : (5k + l)/(4k + 1)    (11k + l + 1)/(8k + 2)    l - k    3k + l < 1";

/// `k·k_coef + l·l_coef + constant`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinearForm {
    pub k: Rational,
    pub l: Rational,
    pub c: Rational,
}

impl LinearForm {
    pub fn constant(c: Rational) -> Self {
        LinearForm {
            k: Rational::zero(),
            l: Rational::zero(),
            c,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.k.is_zero() && self.l.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.is_constant() && self.c.is_zero()
    }

    pub fn eval(&self, k: &Rational, l: &Rational) -> Rational {
        &self.k * k + &self.l * l + &self.c
    }

    fn scale(&self, s: &Rational) -> Self {
        LinearForm {
            k: &self.k * s,
            l: &self.l * s,
            c: &self.c * s,
        }
    }

    fn add(&self, other: &Self) -> Self {
        LinearForm {
            k: &self.k + &other.k,
            l: &self.l + &other.l,
            c: &self.c + &other.c,
        }
    }

    fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (coef, sym) in [(&self.k, "k"), (&self.l, "l"), (&self.c, "")] {
            if coef.is_zero() {
                continue;
            }
            let negative = *coef < Rational::zero();
            let mag = if negative {
                -coef.clone()
            } else {
                coef.clone()
            };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mag_text = if mag.is_integer() {
                mag.numer().to_string()
            } else if sym.is_empty() {
                format::rational(&mag)
            } else {
                format!("({})", format::rational(&mag))
            };
            if sym.is_empty() {
                out.push_str(&mag_text);
            } else if mag.is_one() {
                out.push_str(sym);
            } else {
                out.push_str(&mag_text);
                out.push_str(sym);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// `(a·k + b·ℓ + c)/(d·k + e·ℓ + f)` with exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalObjective {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub e: Rational,
    pub f: Rational,
}

impl FractionalObjective {
    pub fn from_forms(num: LinearForm, den: LinearForm) -> Self {
        FractionalObjective {
            a: num.k,
            b: num.l,
            c: num.c,
            d: den.k,
            e: den.l,
            f: den.c,
        }
    }

    pub fn numerator(&self) -> LinearForm {
        LinearForm {
            k: self.a.clone(),
            l: self.b.clone(),
            c: self.c.clone(),
        }
    }

    pub fn denominator(&self) -> LinearForm {
        LinearForm {
            k: self.d.clone(),
            l: self.e.clone(),
            c: self.f.clone(),
        }
    }

    pub fn eval_at(&self, k: &Rational, l: &Rational) -> Result<Rational, CalcError> {
        let den = self.denominator().eval(k, l);
        if den.is_zero() {
            return Err(CalcError::DivisionByZero {
                k: format::rational(k),
                l: format::rational(l),
            });
        }
        Ok(self.numerator().eval(k, l) / den)
    }

    /// Exact value at an exponent pair.
    pub fn eval(&self, p: &ExponentPair) -> Result<Rational, CalcError> {
        self.eval_at(p.k(), p.l())
    }
}

impl fmt::Display for FractionalObjective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.numerator(), self.denominator())
    }
}

impl std::str::FromStr for FractionalObjective {
    type Err = CalcError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_objective(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Less,
    LessEq,
    Greater,
    GreaterEq,
    Equal,
}

impl Comparison {
    fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Comparison::Less => lhs < rhs,
            Comparison::LessEq => lhs <= rhs,
            Comparison::Greater => lhs > rhs,
            Comparison::GreaterEq => lhs >= rhs,
            Comparison::Equal => lhs == rhs,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Comparison::Less => "<",
            Comparison::LessEq => "<=",
            Comparison::Greater => ">",
            Comparison::GreaterEq => ">=",
            Comparison::Equal => "=",
        }
    }
}

/// `lhs REL rhs` with both sides linear in k and ℓ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearConstraint {
    pub lhs: LinearForm,
    pub comparison: Comparison,
    pub rhs: LinearForm,
}

impl LinearConstraint {
    pub fn new(lhs: LinearForm, comparison: Comparison, rhs: LinearForm) -> Self {
        LinearConstraint {
            lhs,
            comparison,
            rhs,
        }
    }

    pub fn holds(&self, p: &ExponentPair) -> bool {
        self.comparison
            .holds(&self.lhs.eval(p.k(), p.l()), &self.rhs.eval(p.k(), p.l()))
    }
}

impl fmt::Display for LinearConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.lhs, self.comparison.symbol(), self.rhs)
    }
}

/// Parse a linear-fractional objective such as `"(5k + l)/(4k + 1)"`.
///
/// Error positions are 0-based character offsets into `text`.
pub fn parse_objective(text: &str) -> Result<FractionalObjective, CalcError> {
    let mut p = Parser::new(text)?;
    let value = p.expr()?;
    p.expect_end()?;
    if value.den.is_zero() {
        return Err(p.error_at(0, "denominator is identically zero"));
    }
    Ok(FractionalObjective::from_forms(value.num, value.den))
}

/// Parse a linear constraint such as `"3k + l < 1"`.
pub fn parse_constraint(text: &str) -> Result<LinearConstraint, CalcError> {
    let mut p = Parser::new(text)?;
    let lhs_pos = p.position();
    let lhs = p.expr()?;
    let (cmp, cmp_pos) = match p.next() {
        Some((Token::Cmp(c), pos)) => (c, pos),
        Some((_, pos)) => return Err(p.error_at(pos, "expected comparison operator")),
        None => return Err(p.error_at(text.chars().count(), "expected comparison operator")),
    };
    let rhs_pos = p.position();
    let rhs = p.expr()?;
    p.expect_end()?;
    let lhs = lhs
        .into_linear()
        .ok_or_else(|| nonlinear(lhs_pos, "left side is not linear"))?;
    let rhs = rhs
        .into_linear()
        .ok_or_else(|| nonlinear(rhs_pos, "right side is not linear"))?;
    let _ = cmp_pos;
    Ok(LinearConstraint::new(lhs, cmp, rhs))
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(Rational),
    Var(Var),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Cmp(Comparison),
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Var {
    K,
    L,
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>, CalcError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' | '.' => {
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                    i += 1;
                }
                let lit: String = chars[start..i].iter().collect();
                let value = parse_decimal(&lit).ok_or_else(|| CalcError::Parse {
                    position: start,
                    message: format!("malformed number {lit:?}"),
                })?;
                out.push((Token::Num(value), start));
                continue;
            }
            c if c.is_alphabetic() => {
                while i < chars.len() && chars[i].is_alphabetic() {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                // Runs like "kl" are juxtaposed variables.
                for (offset, ch) in word.chars().enumerate() {
                    let var = match ch {
                        'k' | 'κ' => Var::K,
                        'l' | 'ℓ' | 'λ' => Var::L,
                        _ => {
                            return Err(CalcError::Parse {
                                position: start + offset,
                                message: format!("unknown symbol {word:?} (use k and l)"),
                            })
                        }
                    };
                    out.push((Token::Var(var), start + offset));
                }
                continue;
            }
            '+' => Token::Plus,
            '-' | '−' => Token::Minus,
            '*' | '·' | '×' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            '≤' => Token::Cmp(Comparison::LessEq),
            '≥' => Token::Cmp(Comparison::GreaterEq),
            '<' | '>' | '=' => {
                let next_eq = chars.get(i + 1) == Some(&'=');
                let cmp = match (c, next_eq) {
                    ('<', true) => Comparison::LessEq,
                    ('<', false) => Comparison::Less,
                    ('>', true) => Comparison::GreaterEq,
                    ('>', false) => Comparison::Greater,
                    _ => Comparison::Equal,
                };
                if next_eq {
                    i += 1;
                }
                Token::Cmp(cmp)
            }
            other => {
                return Err(CalcError::Parse {
                    position: start,
                    message: format!("unexpected character {other:?}"),
                })
            }
        };
        i += 1;
        out.push((tok, start));
    }
    Ok(out)
}

/// A sub-expression value: `num / den` with linear parts.
#[derive(Debug, Clone)]
struct Frac {
    num: LinearForm,
    den: LinearForm,
}

impl Frac {
    fn linear(num: LinearForm) -> Self {
        Frac {
            num,
            den: LinearForm::constant(Rational::one()),
        }
    }

    fn constant_value(&self) -> Option<Rational> {
        if self.num.is_constant() && self.den.is_constant() && !self.den.c.is_zero() {
            Some(&self.num.c / &self.den.c)
        } else {
            None
        }
    }

    /// Fold a constant denominator into the numerator.
    fn normalized(self) -> Self {
        if self.den.is_constant() && !self.den.c.is_zero() && !self.den.c.is_one() {
            let inv = Rational::one() / &self.den.c;
            Frac::linear(self.num.scale(&inv))
        } else {
            self
        }
    }

    fn into_linear(self) -> Option<LinearForm> {
        if self.den.is_constant() && !self.den.c.is_zero() {
            let inv = Rational::one() / &self.den.c;
            Some(self.num.scale(&inv))
        } else {
            None
        }
    }
}

fn nonlinear(position: usize, message: &str) -> CalcError {
    CalcError::Nonlinear {
        position,
        message: message.to_string(),
    }
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    len_chars: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self, CalcError> {
        Ok(Parser {
            tokens: tokenize(text)?,
            pos: 0,
            len_chars: text.chars().count(),
        })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn next(&mut self) -> Option<(Token, usize)> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn position(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(_, p)| *p)
            .unwrap_or(self.len_chars)
    }

    fn error_at(&self, position: usize, message: &str) -> CalcError {
        CalcError::Parse {
            position,
            message: message.to_string(),
        }
    }

    fn expect_end(&self) -> Result<(), CalcError> {
        match self.tokens.get(self.pos) {
            None => Ok(()),
            Some((t, p)) => Err(self.error_at(*p, &format!("unexpected token {t:?}"))),
        }
    }

    fn expr(&mut self) -> Result<Frac, CalcError> {
        let mut acc = self.term()?;
        loop {
            let (negate, op_pos) = match self.peek() {
                Some(Token::Plus) => (false, self.position()),
                Some(Token::Minus) => (true, self.position()),
                _ => return Ok(acc),
            };
            self.pos += 1;
            let mut rhs = self.term()?;
            if negate {
                rhs.num = rhs.num.neg();
            }
            acc = add(acc, rhs).ok_or_else(|| {
                nonlinear(
                    op_pos,
                    "sum of fractions with different non-constant denominators",
                )
            })?;
        }
    }

    fn term(&mut self) -> Result<Frac, CalcError> {
        let mut acc = self.unary()?;
        loop {
            let op_pos = self.position();
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = mul(acc, rhs)
                        .ok_or_else(|| nonlinear(op_pos, "product of two non-constant terms"))?;
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let rhs_pos = self.position();
                    let rhs = self.unary()?;
                    if rhs.constant_value().is_some_and(|v| v.is_zero()) {
                        return Err(self.error_at(rhs_pos, "division by zero"));
                    }
                    acc = div(acc, rhs)
                        .ok_or_else(|| nonlinear(op_pos, "quotient is not linear-fractional"))?;
                }
                Some(Token::Var(_)) | Some(Token::LParen) => {
                    let rhs = self.unary()?;
                    acc = mul(acc, rhs)
                        .ok_or_else(|| nonlinear(op_pos, "product of two non-constant terms"))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Frac, CalcError> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                let mut v = self.unary()?;
                v.num = v.num.neg();
                Ok(v)
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Frac, CalcError> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        let caret_pos = self.position();
        self.pos += 1;
        let exp = match self.next() {
            Some((Token::Num(n), _)) if n.is_integer() && n >= Rational::zero() => n,
            Some((_, p)) => return Err(self.error_at(p, "exponent must be a non-negative integer")),
            None => return Err(self.error_at(self.len_chars, "missing exponent")),
        };
        let exp: usize = num_traits::ToPrimitive::to_usize(exp.numer())
            .ok_or_else(|| self.error_at(caret_pos, "exponent too large"))?;
        if let Some(c) = base.constant_value() {
            return Ok(Frac::linear(LinearForm::constant(num_traits::pow(c, exp))));
        }
        match exp {
            0 => Ok(Frac::linear(LinearForm::constant(Rational::one()))),
            1 => Ok(base),
            _ => Err(nonlinear(caret_pos, "power of a non-constant term")),
        }
    }

    fn atom(&mut self) -> Result<Frac, CalcError> {
        match self.next() {
            Some((Token::Num(n), _)) => Ok(Frac::linear(LinearForm::constant(n))),
            Some((Token::Var(v), _)) => {
                let mut form = LinearForm::default();
                match v {
                    Var::K => form.k = Rational::one(),
                    Var::L => form.l = Rational::one(),
                }
                Ok(Frac::linear(form))
            }
            Some((Token::LParen, open)) => {
                let inner = self.expr()?;
                match self.next() {
                    Some((Token::RParen, _)) => Ok(inner),
                    Some((_, p)) => Err(self.error_at(p, "expected ')'")),
                    None => Err(self.error_at(open, "unclosed '('")),
                }
            }
            Some((t, p)) => Err(self.error_at(p, &format!("unexpected token {t:?}"))),
            None => Err(self.error_at(self.len_chars, "unexpected end of input")),
        }
    }
}

fn add(x: Frac, y: Frac) -> Option<Frac> {
    add_raw(x, y).map(Frac::normalized)
}

fn mul(x: Frac, y: Frac) -> Option<Frac> {
    mul_raw(x, y).map(Frac::normalized)
}

fn div(x: Frac, y: Frac) -> Option<Frac> {
    div_raw(x, y).map(Frac::normalized)
}

fn add_raw(x: Frac, y: Frac) -> Option<Frac> {
    if x.den == y.den {
        return Some(Frac {
            num: x.num.add(&y.num),
            den: x.den,
        });
    }
    if x.den.is_constant() && y.den.is_constant() {
        return Some(Frac {
            num: x.num.scale(&y.den.c).add(&y.num.scale(&x.den.c)),
            den: LinearForm::constant(&x.den.c * &y.den.c),
        });
    }
    if let Some(cx) = x.constant_value() {
        return Some(Frac {
            num: y.den.scale(&cx).add(&y.num),
            den: y.den,
        });
    }
    if let Some(cy) = y.constant_value() {
        return Some(Frac {
            num: x.num.add(&x.den.scale(&cy)),
            den: x.den,
        });
    }
    None
}

fn mul_raw(x: Frac, y: Frac) -> Option<Frac> {
    if let Some(cx) = x.constant_value() {
        return Some(Frac {
            num: y.num.scale(&cx),
            den: y.den,
        });
    }
    if let Some(cy) = y.constant_value() {
        return Some(Frac {
            num: x.num.scale(&cy),
            den: x.den,
        });
    }
    None
}

fn div_raw(x: Frac, y: Frac) -> Option<Frac> {
    if let Some(cy) = y.constant_value() {
        return Some(Frac {
            num: x.num,
            den: x.den.scale(&cy),
        });
    }
    if x.den.is_constant() && y.den.is_constant() {
        return Some(Frac {
            num: x.num.scale(&y.den.c),
            den: y.num.scale(&x.den.c),
        });
    }
    None
}

#[cfg(test)]
mod tests {
    use super::super::{int, rat};
    use super::*;

    fn coeffs(o: &FractionalObjective) -> [Rational; 6] {
        [
            o.a.clone(),
            o.b.clone(),
            o.c.clone(),
            o.d.clone(),
            o.e.clone(),
            o.f.clone(),
        ]
    }

    #[test]
    fn parses_theorem_one_objective() {
        let o = parse_objective("(5k + l)/(4k + 1)").unwrap();
        assert_eq!(coeffs(&o), [int(5), int(1), int(0), int(4), int(0), int(1)]);
    }

    #[test]
    fn parses_constant_denominator() {
        let o = parse_objective("(l - k)/(1)").unwrap();
        assert_eq!(
            coeffs(&o),
            [int(-1), int(1), int(0), int(0), int(0), int(1)]
        );
        let bare = parse_objective("l - k").unwrap();
        assert_eq!(bare, o);
    }

    #[test]
    fn parses_theorem_two_objective() {
        let o = parse_objective("(11k + l + 1)/(8k + 2)").unwrap();
        assert_eq!(
            coeffs(&o),
            [int(11), int(1), int(1), int(8), int(0), int(2)]
        );
    }

    #[test]
    fn whitespace_and_rational_coefficients() {
        let a = parse_objective("(1/2+6k)/(1+4k)").unwrap();
        let b = parse_objective("  ( 1/2 + 6 k ) / ( 1 + 4 k )  ").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.c, rat(1, 2));
        let c = parse_objective("(0.5 + 6*k)/(1 + 4*k)").unwrap();
        assert_eq!(a, c);
        let unicode = parse_objective("(5κ + ℓ)/(4κ + 1)").unwrap();
        assert_eq!(unicode, parse_objective("(5k + l)/(4k + 1)").unwrap());
    }

    #[test]
    fn nonlinear_terms_rejected_with_position() {
        match parse_objective("(k*l + 1)/(2)") {
            Err(CalcError::Nonlinear { position, .. }) => assert_eq!(position, 2),
            other => panic!("expected nonlinear error, got {other:?}"),
        }
        assert!(matches!(
            parse_objective("k^2"),
            Err(CalcError::Nonlinear { position: 1, .. })
        ));
        assert!(matches!(
            parse_objective("(k)/(l) + 1/(k)"),
            Err(CalcError::Nonlinear { .. })
        ));
        assert!(matches!(
            parse_objective("kl"),
            Err(CalcError::Nonlinear { .. })
        ));
    }

    #[test]
    fn malformed_input_reports_position() {
        match parse_objective("(5k + l)/(4k + ") {
            Err(CalcError::Parse { position, .. }) => assert_eq!(position, 15),
            other => panic!("{other:?}"),
        }
        match parse_objective("(5k + x)") {
            Err(CalcError::Parse { position, .. }) => assert_eq!(position, 6),
            other => panic!("{other:?}"),
        }
        match parse_objective("(5k + l") {
            Err(CalcError::Parse { position, .. }) => assert_eq!(position, 0),
            other => panic!("{other:?}"),
        }
        assert!(parse_objective("k / 0").is_err());
        assert!(parse_objective("0 / (k - k)").is_err());
        assert!(parse_objective("").is_err());
    }

    #[test]
    fn combines_fractions_sharing_a_denominator() {
        let o = parse_objective("k/(k+1) + 1").unwrap();
        assert_eq!(o, parse_objective("(2k + 1)/(k + 1)").unwrap());
    }

    #[test]
    fn display_round_trips() {
        for text in [
            "(5k + l)/(4k + 1)",
            "(11k + l + 1)/(8k + 2)",
            "(1/2 + 6k)/(1 + 4k)",
            "(-k + l)/(1)",
            "(-(3/7)l - 2/9)/(k - (1/3)l + 5)",
        ] {
            let o = parse_objective(text).unwrap();
            let again = parse_objective(&o.to_string()).unwrap();
            assert_eq!(o, again, "{text} -> {o}");
        }
        assert_eq!(
            parse_objective("(5k + l)/(4k + 1)").unwrap().to_string(),
            "(5k + l)/(4k + 1)"
        );
    }

    #[test]
    fn eval_objective_examples() {
        let o = parse_objective("(5k + l)/(4k + 1)").unwrap();
        let huxley = ExponentPair::new(rat(32, 205), rat(32, 205) + rat(1, 2)).unwrap();
        assert_eq!(o.eval(&huxley).unwrap(), rat(589, 666));
        let p = ExponentPair::new(rat(1, 14), rat(11, 14)).unwrap();
        assert_eq!(o.eval(&p).unwrap(), rat(8, 9));
        let diff = parse_objective("l - k").unwrap();
        for k in [rat(0, 1), rat(1, 7), rat(1, 2)] {
            let p = ExponentPair::new(k.clone(), k + rat(1, 2)).unwrap();
            assert_eq!(diff.eval(&p).unwrap(), rat(1, 2));
        }
    }

    #[test]
    fn eval_detects_vanishing_denominator() {
        let o = parse_objective("1/(2k - 1)").unwrap();
        let p = ExponentPair::new(rat(1, 2), rat(1, 2)).unwrap();
        assert!(matches!(o.eval(&p), Err(CalcError::DivisionByZero { .. })));
    }

    #[test]
    fn constraints() {
        let c = parse_constraint("3k + l < 1").unwrap();
        let ok = ExponentPair::new(rat(1, 58), rat(849, 928)).unwrap();
        let bad = ExponentPair::new(rat(1, 6), rat(2, 3)).unwrap();
        assert!(c.holds(&ok));
        assert!(!c.holds(&bad));
        let le = parse_constraint("k + l <= 1").unwrap();
        let trivial = ExponentPair::new(rat(0, 1), rat(1, 1)).unwrap();
        assert!(le.holds(&trivial));
        assert!(!parse_constraint("k + l < 1").unwrap().holds(&trivial));
        assert!(parse_constraint("≥ 1").is_err());
        assert!(parse_constraint("k + l").is_err());
        assert!(matches!(
            parse_constraint("1/k < 1"),
            Err(CalcError::Nonlinear { .. })
        ));
        assert_eq!(c.to_string(), "3k + l < 1");
    }
}
