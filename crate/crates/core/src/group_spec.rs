//! Text syntax for generating sets.
//!
//! ```text
//! spec := term (',' term)*
//! term := 'rot(' INT ')' | 'refl(' INT ')' | 'scalar(' INT ';' INTLIST ';' INTLIST ')'
//! ```
//!
//! `rot(a)` is `rho^a`, `refl(j)` is `rho^j r`, and `scalar(m; e..; f..)` sends
//! `a_i` to `z^{e_i} a_i` and `a_i*` to `z^{f_i} a_i*` for `z` a primitive
//! `m`-th root of unity. Whitespace is ignored.

use std::fmt;
use std::sync::Arc;

use crate::scalars::{lcm, CyclotomicContext, Scalar};
use crate::symmetry::{Automorphism, FiniteGroup, SubgroupKind};
use crate::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorSpec {
    Rot(i64),
    Refl(i64),
    Scalar { m: u64, xi: Vec<i64>, xi_star: Vec<i64> },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    pub generators: Vec<GeneratorSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GroupSpecError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("scalar term at byte {offset} lists {found} exponents, expected {expected}")]
    Arity {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("scalar term at byte {offset} has conductor 0")]
    ZeroScalar { offset: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, GroupSpecError> {
        Err(GroupSpecError::Syntax {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn expect(&mut self, token: &str) -> Result<(), GroupSpecError> {
        self.skip_ws();
        if self.text[self.pos..].starts_with(token) {
            self.pos += token.len();
            Ok(())
        } else {
            self.error(format!("expected '{token}'"))
        }
    }

    fn keyword(&mut self) -> Result<&'a str, GroupSpecError> {
        self.skip_ws();
        let start = self.pos;
        let len = self.text[start..].chars().take_while(char::is_ascii_alphabetic).count();
        if len == 0 {
            return self.error("expected 'rot', 'refl' or 'scalar'");
        }
        self.pos += len;
        Ok(&self.text[start..start + len])
    }

    fn int(&mut self) -> Result<i64, GroupSpecError> {
        self.skip_ws();
        let start = self.pos;
        let mut end = start;
        let bytes = self.text.as_bytes();
        if end < bytes.len() && (bytes[end] == b'-' || bytes[end] == b'+') {
            end += 1;
        }
        let digits_start = end;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == digits_start {
            return self.error("expected an integer");
        }
        match self.text[start..end].parse() {
            Ok(v) => {
                self.pos = end;
                Ok(v)
            }
            Err(_) => self.error("integer out of range"),
        }
    }

    fn int_list(&mut self) -> Result<Vec<i64>, GroupSpecError> {
        let mut out = vec![self.int()?];
        while self.peek() == Some(',') {
            self.pos += 1;
            out.push(self.int()?);
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(usize, GeneratorSpec), GroupSpecError> {
        self.skip_ws();
        let start = self.pos;
        let word = self.keyword()?;
        let term = match word {
            "rot" | "refl" => {
                self.expect("(")?;
                let a = self.int()?;
                self.expect(")")?;
                if word == "rot" {
                    GeneratorSpec::Rot(a)
                } else {
                    GeneratorSpec::Refl(a)
                }
            }
            "scalar" => {
                self.expect("(")?;
                let m_at = self.pos;
                let m = self.int()?;
                if m < 0 {
                    self.pos = m_at;
                    return self.error("conductor must be positive");
                }
                self.expect(";")?;
                let xi = self.int_list()?;
                self.expect(";")?;
                let xi_star = self.int_list()?;
                self.expect(")")?;
                if m == 0 {
                    return Err(GroupSpecError::ZeroScalar { offset: start });
                }
                GeneratorSpec::Scalar {
                    m: m as u64,
                    xi,
                    xi_star,
                }
            }
            _ => {
                self.pos = start;
                return self.error(format!("unknown generator '{word}'"));
            }
        };
        Ok((start, term))
    }
}

/// Parses a generating set; positions in errors are byte offsets into `text`.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec, GroupSpecError> {
    parse_with_offsets(text).map(|terms| GroupSpec {
        generators: terms.into_iter().map(|(_, t)| t).collect(),
    })
}

fn parse_with_offsets(text: &str) -> Result<Vec<(usize, GeneratorSpec)>, GroupSpecError> {
    let mut p = Parser { text, pos: 0 };
    let mut terms = vec![p.term()?];
    loop {
        match p.peek() {
            None => break,
            Some(',') => {
                p.pos += 1;
                terms.push(p.term()?);
            }
            Some(_) => return p.error("expected ',' or end of input"),
        }
    }
    Ok(terms)
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        match self {
            GeneratorSpec::Rot(a) => write!(f, "rot({a})"),
            GeneratorSpec::Refl(j) => write!(f, "refl({j})"),
            GeneratorSpec::Scalar { m, xi, xi_star } => write!(f, "scalar({m};{};{})", join(xi), join(xi_star)),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl GroupSpec {
    /// The spec naming a subgroup of `D_n` from its descriptor.
    pub fn for_subgroup(kind: SubgroupKind) -> Option<GroupSpec> {
        let generators = match kind {
            SubgroupKind::Cyclic { step } => vec![GeneratorSpec::Rot(step as i64)],
            SubgroupKind::Dihedral { step, offset } => {
                vec![GeneratorSpec::Rot(step as i64), GeneratorSpec::Refl(offset as i64)]
            }
            SubgroupKind::Scalar | SubgroupKind::Mixed => return None,
        };
        Some(GroupSpec { generators })
    }

    /// Common conductor of all scalar terms.
    pub fn conductor(&self) -> usize {
        self.generators.iter().fold(1, |acc, g| match g {
            GeneratorSpec::Scalar { m, .. } => lcm(acc, *m as usize),
            _ => acc,
        })
    }

    /// Builds the generators for the quiver with `n` vertices; integers are
    /// reduced mod `n`.
    pub fn elaborate(&self, n: usize) -> Result<(Arc<CyclotomicContext>, Vec<Automorphism>), GroupSpecError> {
        crate::quiver::QuiverA::new(n)?;
        let ctx = CyclotomicContext::new(self.conductor());
        let mut out = Vec::new();
        for (pos, g) in self.generators.iter().enumerate() {
            out.push(match g {
                GeneratorSpec::Rot(a) => Automorphism::rotation(n, *a, &ctx),
                GeneratorSpec::Refl(j) => Automorphism::reflection(n, *j, &ctx),
                GeneratorSpec::Scalar { m, xi, xi_star } => {
                    for list in [xi, xi_star] {
                        if list.len() != n {
                            return Err(GroupSpecError::Arity {
                                offset: pos,
                                expected: n,
                                found: list.len(),
                            });
                        }
                    }
                    let local = CyclotomicContext::new(*m as usize);
                    let lift = |e: &i64| Scalar::root_of_unity(&local, *e).embed(&ctx);
                    Automorphism::scalar(xi.iter().map(lift).collect(), xi_star.iter().map(lift).collect(), &ctx)
                }
            });
        }
        Ok((ctx, out))
    }

    /// Generated group, capped at `cap` elements.
    pub fn group(&self, n: usize, cap: usize) -> Result<FiniteGroup, GroupSpecError> {
        let (ctx, gens) = self.elaborate(n)?;
        Ok(FiniteGroup::generate(n, &ctx, gens, cap)?)
    }
}

/// Parses `text` and reports arity errors at the byte offset of the offending term.
pub fn parse_group(text: &str, n: usize, cap: usize) -> Result<FiniteGroup, GroupSpecError> {
    let terms = parse_with_offsets(text)?;
    for (offset, t) in &terms {
        if let GeneratorSpec::Scalar { xi, xi_star, .. } = t {
            for list in [xi, xi_star] {
                if list.len() != n {
                    return Err(GroupSpecError::Arity {
                        offset: *offset,
                        expected: n,
                        found: list.len(),
                    });
                }
            }
        }
    }
    GroupSpec {
        generators: terms.into_iter().map(|(_, t)| t).collect(),
    }
    .group(n, cap)
}
