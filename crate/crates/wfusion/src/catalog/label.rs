use std::fmt;

use thiserror::Error;

use super::params::AlgebraParams;

/// Errors raised by the label grammar.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelError {
    #[error("syntax error in label `{0}`: {1}")]
    Syntax(String, String),
    #[error("inadmissible label `{0}`: {1}")]
    Inadmissible(String, String),
}

/// Sign superscript of a simple module or of the top factor of a Q/P module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// A basis label of the fusion ring, or a canonical Kac-table label.
///
/// `SimplePlus` exists only on the boundary (`r = p_plus` or `s = p_minus`);
/// interior `X^+_{r,s}` is not a basis element, and the boundary
/// identifications `K_{r,p_minus} = X^+_{r,p_minus}`, `K_{p_plus,s} = X^+_{p_plus,s}`
/// are represented only by `SimplePlus`. Q labels carry the full tuple
/// `(sign, a, b, c, d)` with `(c, d) = (p_plus - a, b)` or `(a, p_minus - b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModuleLabel {
    K(u32, u32),
    KStar(u32, u32),
    SimplePlus(u32, u32),
    SimpleMinus(u32, u32),
    Minimal(u32, u32),
    Q(Sign, u32, u32, u32, u32),
    P(Sign, u32, u32),
}

/// A simple module `X^sign_{r,s}` over the full range
/// `1 <= r <= p_plus`, `1 <= s <= p_minus`; the basis of the Grothendieck
/// ring. Unlike `ModuleLabel`, interior `X^+` is a legal value here.
///
/// The derived order (all `X^+` lexicographically, then all `X^-`) is the
/// Grothendieck basis order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleLabel {
    pub sign: Sign,
    pub r: u32,
    pub s: u32,
}

impl SimpleLabel {
    pub fn new(sign: Sign, r: u32, s: u32) -> Self {
        SimpleLabel { sign, r, s }
    }
}

impl fmt::Display for SimpleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X{}[{},{}]", self.sign.symbol(), self.r, self.s)
    }
}

impl fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ModuleLabel::K(r, s) => write!(f, "K[{r},{s}]"),
            ModuleLabel::KStar(r, s) => write!(f, "K*[{r},{s}]"),
            ModuleLabel::SimplePlus(r, s) => write!(f, "X+[{r},{s}]"),
            ModuleLabel::SimpleMinus(r, s) => write!(f, "X-[{r},{s}]"),
            ModuleLabel::Minimal(r, s) => write!(f, "L[{r},{s}]"),
            ModuleLabel::Q(sign, a, b, c, d) => {
                write!(f, "Q(X{}[{a},{b}])[{c},{d}]", sign.symbol())
            }
            ModuleLabel::P(sign, r, s) => write!(f, "P{}[{r},{s}]", sign.symbol()),
        }
    }
}

/// Formats a label in the CLI grammar. Inverse of [`parse_label`].
pub fn format_label(label: &ModuleLabel) -> String {
    label.to_string()
}

/// Canonical representative of the Kac class `{(r,s), (p+-r, p--s)}`:
/// the lexicographically smaller pair.
pub fn canonical_kac(params: &AlgebraParams, r: u32, s: u32) -> (u32, u32) {
    let dual = (params.r_dual(r), params.s_dual(s));
    (r, s).min(dual)
}

/// Classification of a Q label's second index pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum QShape {
    /// `(c,d) = (p_plus - a, b)`: thick row-reflected, or thin row when `b = p_minus`.
    Row,
    /// `(c,d) = (a, p_minus - b)`: thick column-reflected, or thin column when `a = p_plus`.
    Col,
}

pub(crate) fn q_shape(params: &AlgebraParams, a: u32, b: u32, c: u32, d: u32) -> Option<QShape> {
    if a >= 1 && a <= params.p_plus() - 1 && b >= 1 && b <= params.p_minus() && c == params.r_dual(a) && d == b {
        Some(QShape::Row)
    } else if a >= 1 && a <= params.p_plus() && b >= 1 && b <= params.p_minus() - 1 && c == a && d == params.s_dual(b) {
        Some(QShape::Col)
    } else {
        None
    }
}

/// Validates a structurally well-formed label against the admissible set for
/// `params`, canonicalizing Kac labels.
fn admit(params: &AlgebraParams, label: ModuleLabel, text: &str) -> Result<ModuleLabel, LabelError> {
    let p_plus = params.p_plus();
    let p_minus = params.p_minus();
    let bad = |why: &str| Err(LabelError::Inadmissible(text.to_string(), why.to_string()));
    match label {
        ModuleLabel::K(r, s) | ModuleLabel::KStar(r, s) => {
            if r >= 1 && r < p_plus && s >= 1 && s < p_minus {
                Ok(label)
            } else {
                bad("K and K* indices must satisfy 1 <= r < p_plus, 1 <= s < p_minus; the boundary modules are the X+ labels")
            }
        }
        ModuleLabel::SimplePlus(r, s) => {
            if r >= 1 && r <= p_plus && s >= 1 && s <= p_minus && (r == p_plus || s == p_minus) {
                Ok(label)
            } else if r >= 1 && r < p_plus && s >= 1 && s < p_minus {
                bad("interior X+ is not a basis label; use K[r,s] (it has the same image in the quotient)")
            } else {
                bad("X+ indices out of range")
            }
        }
        ModuleLabel::SimpleMinus(r, s) => {
            if r >= 1 && r <= p_plus && s >= 1 && s <= p_minus {
                Ok(label)
            } else {
                bad("X- indices must satisfy 1 <= r <= p_plus, 1 <= s <= p_minus")
            }
        }
        ModuleLabel::Minimal(r, s) => {
            if r >= 1 && r < p_plus && s >= 1 && s < p_minus {
                let (cr, cs) = canonical_kac(params, r, s);
                Ok(ModuleLabel::Minimal(cr, cs))
            } else {
                bad("L indices must be interior: 1 <= r < p_plus, 1 <= s < p_minus")
            }
        }
        ModuleLabel::Q(_, a, b, c, d) => match q_shape(params, a, b, c, d) {
            Some(_) => Ok(label),
            None => bad("Q subscripts must satisfy (c,d) = (p_plus-a, b) or (a, p_minus-b) within range"),
        },
        ModuleLabel::P(_, r, s) => {
            if r >= 1 && r < p_plus && s >= 1 && s < p_minus {
                Ok(label)
            } else {
                bad("P indices must satisfy 1 <= r < p_plus, 1 <= s < p_minus")
            }
        }
    }
}

struct Cursor<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            text,
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, why: &str) -> LabelError {
        LabelError::Syntax(self.text.to_string(), why.to_string())
    }

    fn eat(&mut self, expected: u8) -> Result<(), LabelError> {
        if self.bytes.get(self.pos) == Some(&expected) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected `{}` at offset {}", expected as char, self.pos)))
        }
    }

    fn eat_opt(&mut self, expected: u8) -> bool {
        if self.bytes.get(self.pos) == Some(&expected) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sign(&mut self) -> Result<Sign, LabelError> {
        match self.bytes.get(self.pos) {
            Some(b'+') => {
                self.pos += 1;
                Ok(Sign::Plus)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(Sign::Minus)
            }
            _ => Err(self.err("expected `+` or `-`")),
        }
    }

    fn integer(&mut self) -> Result<u32, LabelError> {
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a decimal integer"));
        }
        self.text[start..self.pos]
            .parse::<u32>()
            .map_err(|_| self.err("integer out of range"))
    }

    fn pair(&mut self) -> Result<(u32, u32), LabelError> {
        self.eat(b'[')?;
        let a = self.integer()?;
        self.eat(b',')?;
        let b = self.integer()?;
        self.eat(b']')?;
        Ok((a, b))
    }

    fn done(&self) -> bool {
        self.pos == self.bytes.len()
    }
}

/// Parses a label in the grammar `K[r,s]`, `K*[r,s]`, `X+[r,s]`, `X-[r,s]`,
/// `L[r,s]`, `Q(X+[a,b])[c,d]`, `Q(X-[a,b])[c,d]`, `P+[r,s]`, `P-[r,s]`.
/// Whitespace is insignificant. The result is admissible for `params` and
/// in canonical form (`parse . format = id`, `format . parse` canonicalizes).
pub fn parse_label(params: &AlgebraParams, input: &str) -> Result<ModuleLabel, LabelError> {
    let stripped: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let mut cur = Cursor::new(&stripped);
    let label = match cur.bytes.first() {
        Some(b'K') => {
            cur.pos += 1;
            let star = cur.eat_opt(b'*');
            let (r, s) = cur.pair()?;
            if star {
                ModuleLabel::KStar(r, s)
            } else {
                ModuleLabel::K(r, s)
            }
        }
        Some(b'X') => {
            cur.pos += 1;
            let sign = cur.sign()?;
            let (r, s) = cur.pair()?;
            match sign {
                Sign::Plus => ModuleLabel::SimplePlus(r, s),
                Sign::Minus => ModuleLabel::SimpleMinus(r, s),
            }
        }
        Some(b'L') => {
            cur.pos += 1;
            let (r, s) = cur.pair()?;
            ModuleLabel::Minimal(r, s)
        }
        Some(b'Q') => {
            cur.pos += 1;
            cur.eat(b'(')?;
            cur.eat(b'X')?;
            let sign = cur.sign()?;
            let (a, b) = cur.pair()?;
            cur.eat(b')')?;
            let (c, d) = cur.pair()?;
            ModuleLabel::Q(sign, a, b, c, d)
        }
        Some(b'P') => {
            cur.pos += 1;
            let sign = cur.sign()?;
            let (r, s) = cur.pair()?;
            ModuleLabel::P(sign, r, s)
        }
        _ => return Err(cur.err("expected one of K, K*, X+, X-, L, Q, P")),
    };
    if !cur.done() {
        return Err(cur.err(&format!("trailing input at offset {}", cur.pos)));
    }
    admit(params, label, &stripped)
}

/// Parses an `X+[r,s]` / `X-[r,s]` string as a Grothendieck basis label,
/// where interior `X+` is allowed.
pub fn parse_simple_label(params: &AlgebraParams, input: &str) -> Result<SimpleLabel, LabelError> {
    let stripped: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let mut cur = Cursor::new(&stripped);
    cur.eat(b'X')?;
    let sign = cur.sign()?;
    let (r, s) = cur.pair()?;
    if !cur.done() {
        return Err(cur.err("trailing input"));
    }
    if r >= 1 && r <= params.p_plus() && s >= 1 && s <= params.p_minus() {
        Ok(SimpleLabel::new(sign, r, s))
    } else {
        Err(LabelError::Inadmissible(
            stripped,
            "simple-module indices must satisfy 1 <= r <= p_plus, 1 <= s <= p_minus".to_string(),
        ))
    }
}
