//! Textual pair specifications:
//!
//! ```text
//! pair    := "g=" ambient ";" "h=" algebra ";" "V=" modexpr
//! ambient := ("sl" | "so" | "sp") ":" INT
//! algebra := factor ("+" factor)*
//! factor  := ("sl" | "so" | "sp") ":" INT | "g2" | "f4" | "e6" | "e7" | "e8"
//! modexpr := term ("(+)" term)*
//! term    := atom ("(x)" atom)*
//! atom    := "std" INT | "dual(" modexpr ")"
//!          | "irrep" INT "[" INT ("," INT)* "]" | "triv:" INT
//! ```
//!
//! Whitespace-insensitive; factor indices are 1-based in the text and
//! 0-based internally. A parenthesized modexpr is also accepted as an atom,
//! so every pretty-printed expression re-parses to itself.

use crate::algebra::{FactorSpec, SemisimpleAlgebra};
use crate::embedding::{AmbientKind, EmbeddingSpec, ModuleExpr};
use crate::RhoError;

/// A parsed pair before semantic validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedPair {
    pub ambient: (AmbientKind, usize),
    pub factors: Vec<FactorSpec>,
    pub v: ModuleExpr,
}

impl ParsedPair {
    /// Builds and validates the embedding spec (dimension and form checks).
    pub fn into_spec(self) -> Result<EmbeddingSpec, RhoError> {
        let h = SemisimpleAlgebra::new(&self.factors)?;
        let n = self.v_dim_expected();
        let spec = EmbeddingSpec::new(h, self.v, self.ambient.0)?;
        if spec.dim_v() != n {
            return Err(RhoError::InvalidInput(format!(
                "dim V = {} does not match the declared ambient {}:{}",
                spec.dim_v(),
                self.ambient.0,
                self.ambient.1
            )));
        }
        Ok(spec)
    }

    fn v_dim_expected(&self) -> u64 {
        match self.ambient.0 {
            AmbientKind::Sp => 2 * self.ambient.1 as u64,
            _ => self.ambient.1 as u64,
        }
    }
}

/// Parses a full pair specification.
pub fn parse_pair(input: &str) -> Result<ParsedPair, RhoError> {
    let mut p = Parser::new(input);
    let pair = p.pair()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(pair)
}

/// Parses a pair specification and validates it into an embedding spec.
pub fn parse_spec(input: &str) -> Result<EmbeddingSpec, RhoError> {
    parse_pair(input)?.into_spec()
}

/// Parses a stand-alone algebra description ("sl:3+sl:2", "g2", ...).
pub fn parse_algebra(input: &str) -> Result<Vec<FactorSpec>, RhoError> {
    let mut p = Parser::new(input);
    let f = p.algebra()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(f)
}

/// Parses a stand-alone module expression.
pub fn parse_module(input: &str) -> Result<ModuleExpr, RhoError> {
    let mut p = Parser::new(input);
    let m = p.modexpr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(m)
}

/// Canonical text of a full pair, `g=...; h=...; V=...`; re-parses to an
/// equal spec.
pub fn pair_string(spec: &EmbeddingSpec) -> String {
    format!("{}; V={}", spec.describe(), spec.v)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
    _input: &'a str,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Parser {
            chars: input.chars().collect(),
            pos: 0,
            line: 1,
            col: 1,
            _input: input,
        }
    }

    fn err(&self, msg: impl Into<String>) -> RhoError {
        RhoError::Parse {
            line: self.line,
            col: self.col,
            msg: msg.into(),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    /// Consumes the literal `s` (after skipping whitespace) or fails.
    fn expect(&mut self, s: &str) -> Result<(), RhoError> {
        self.skip_ws();
        let save = (self.pos, self.line, self.col);
        for want in s.chars() {
            match self.bump() {
                Some(c) if c == want => {}
                _ => {
                    (self.pos, self.line, self.col) = save;
                    return Err(self.err(format!("expected \"{s}\"")));
                }
            }
        }
        Ok(())
    }

    /// Non-consuming probe for the literal `s` after whitespace.
    fn try_literal(&mut self, s: &str) -> bool {
        let save = (self.pos, self.line, self.col);
        if self.expect(s).is_ok() {
            true
        } else {
            (self.pos, self.line, self.col) = save;
            false
        }
    }

    fn integer(&mut self) -> Result<u64, RhoError> {
        self.skip_ws();
        let mut digits = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            digits.push(self.bump().unwrap());
        }
        if digits.is_empty() {
            return Err(self.err("expected an integer"));
        }
        digits
            .parse::<u64>()
            .map_err(|_| self.err("integer out of range"))
    }

    fn pair(&mut self) -> Result<ParsedPair, RhoError> {
        self.expect("g")?;
        self.expect("=")?;
        let ambient = self.ambient()?;
        self.expect(";")?;
        self.expect("h")?;
        self.expect("=")?;
        let factors = self.algebra()?;
        self.expect(";")?;
        self.expect("V")?;
        self.expect("=")?;
        let v = self.modexpr()?;
        Ok(ParsedPair { ambient, factors, v })
    }

    fn ambient(&mut self) -> Result<(AmbientKind, usize), RhoError> {
        self.skip_ws();
        let kind = if self.try_literal("sl") {
            AmbientKind::Sl
        } else if self.try_literal("so") {
            AmbientKind::So
        } else if self.try_literal("sp") {
            AmbientKind::Sp
        } else {
            return Err(self.err("expected ambient type sl, so, or sp"));
        };
        self.expect(":")?;
        let n = self.integer()?;
        let n = usize::try_from(n).map_err(|_| self.err("size out of range"))?;
        Ok((kind, n))
    }

    fn algebra(&mut self) -> Result<Vec<FactorSpec>, RhoError> {
        let mut out = vec![self.factor()?];
        while self.try_literal("+") {
            out.push(self.factor()?);
        }
        Ok(out)
    }

    fn factor(&mut self) -> Result<FactorSpec, RhoError> {
        self.skip_ws();
        for (lit, spec) in [
            ("g2", FactorSpec::G2),
            ("f4", FactorSpec::F4),
            ("e6", FactorSpec::E6),
            ("e7", FactorSpec::E7),
            ("e8", FactorSpec::E8),
        ] {
            if self.try_literal(lit) {
                return Ok(spec);
            }
        }
        let kind = if self.try_literal("sl") {
            0
        } else if self.try_literal("so") {
            1
        } else if self.try_literal("sp") {
            2
        } else {
            return Err(self.err("expected a factor (sl:n, so:n, sp:n, g2, f4, e6, e7, e8)"));
        };
        self.expect(":")?;
        let n = self.integer()?;
        let n = usize::try_from(n).map_err(|_| self.err("size out of range"))?;
        Ok(match kind {
            0 => FactorSpec::Sl(n),
            1 => FactorSpec::So(n),
            _ => FactorSpec::Sp(n),
        })
    }

    fn modexpr(&mut self) -> Result<ModuleExpr, RhoError> {
        let mut terms = vec![self.term()?];
        while self.try_literal("(+)") {
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            ModuleExpr::DirectSum(terms)
        })
    }

    fn term(&mut self) -> Result<ModuleExpr, RhoError> {
        let mut atoms = vec![self.atom()?];
        while self.try_literal("(x)") {
            atoms.push(self.atom()?);
        }
        Ok(if atoms.len() == 1 {
            atoms.pop().unwrap()
        } else {
            ModuleExpr::OuterTensor(atoms)
        })
    }

    fn atom(&mut self) -> Result<ModuleExpr, RhoError> {
        self.skip_ws();
        if self.try_literal("std") {
            let u = self.integer()?;
            let u = self.one_based(u)?;
            return Ok(ModuleExpr::Std(u));
        }
        if self.try_literal("dual") {
            self.expect("(")?;
            let inner = self.modexpr()?;
            self.expect(")")?;
            return Ok(ModuleExpr::Dual(Box::new(inner)));
        }
        if self.try_literal("irrep") {
            let u = self.integer()?;
            let u = self.one_based(u)?;
            self.expect("[")?;
            let mut coeffs = vec![self.integer()?];
            while self.try_literal(",") {
                coeffs.push(self.integer()?);
            }
            self.expect("]")?;
            return Ok(ModuleExpr::Irrep(u, coeffs));
        }
        if self.try_literal("triv") {
            self.expect(":")?;
            let k = self.integer()?;
            return Ok(ModuleExpr::Triv(k));
        }
        if self.try_literal("(") {
            let inner = self.modexpr()?;
            self.expect(")")?;
            return Ok(inner);
        }
        Err(self.err("expected a module atom (stdN, irrepN[..], triv:k, dual(..))"))
    }

    fn one_based(&mut self, u: u64) -> Result<usize, RhoError> {
        if u == 0 {
            return Err(self.err("factor indices are 1-based"));
        }
        usize::try_from(u - 1).map_err(|_| self.err("factor index out of range"))
    }
}
