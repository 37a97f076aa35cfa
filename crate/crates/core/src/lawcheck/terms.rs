//! Symbolic string-diagram terms and the axiom catalogue.

use std::fmt;

use crate::cospan::Frobenius;

/// Object expressions over the two variables `X` and `Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Obj {
    X,
    Y,
    Unit,
    Tensor(Box<Obj>, Box<Obj>),
}

impl Obj {
    pub fn tensor(a: Obj, b: Obj) -> Self {
        Self::Tensor(Box::new(a), Box::new(b))
    }

    pub fn mentions_y(&self) -> bool {
        match self {
            Self::Y => true,
            Self::X | Self::Unit => false,
            Self::Tensor(a, b) => a.mentions_y() || b.mentions_y(),
        }
    }
}

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::X => f.write_str("X"),
            Self::Y => f.write_str("Y"),
            Self::Unit => f.write_str("I"),
            Self::Tensor(a, b) => write!(f, "{a}⊗{b}"),
        }
    }
}

/// Morphism expressions. `Compose` is diagrammatic (left to right).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Id(Obj),
    Gen(Frobenius, Obj),
    Braid(Obj, Obj),
    Compose(Vec<Term>),
    Tensor(Vec<Term>),
}

impl Term {
    pub fn mentions_y(&self) -> bool {
        match self {
            Self::Id(o) | Self::Gen(_, o) => o.mentions_y(),
            Self::Braid(a, b) => a.mentions_y() || b.mentions_y(),
            Self::Compose(ts) | Self::Tensor(ts) => ts.iter().any(Term::mentions_y),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |f: &mut fmt::Formatter<'_>, ts: &[Term], sep: &str| {
            f.write_str("(")?;
            for (i, t) in ts.iter().enumerate() {
                if i > 0 {
                    f.write_str(sep)?;
                }
                write!(f, "{t}")?;
            }
            f.write_str(")")
        };
        match self {
            Self::Id(o) => write!(f, "id[{o}]"),
            Self::Gen(k, o) => write!(f, "{}[{o}]", k.name()),
            Self::Braid(a, b) => write!(f, "σ[{a},{b}]"),
            Self::Compose(ts) => join(f, ts, " ; "),
            Self::Tensor(ts) => join(f, ts, " ⊗ "),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Axiom {
    pub name: &'static str,
    pub lhs: Term,
    pub rhs: Term,
}

impl Axiom {
    /// Coherence conditions relate the structure on `X⊗Y` to that on `X`
    /// and `Y`, so they range over pairs of objects.
    pub fn is_binary(&self) -> bool {
        self.lhs.mentions_y() || self.rhs.mentions_y()
    }
}

fn id(o: Obj) -> Term {
    Term::Id(o)
}

fn g(k: Frobenius, o: Obj) -> Term {
    Term::Gen(k, o)
}

fn seq(ts: Vec<Term>) -> Term {
    Term::Compose(ts)
}

fn par(ts: Vec<Term>) -> Term {
    Term::Tensor(ts)
}

/// The twelve axioms of a special commutative Frobenius monoid on `X`
/// (with symmetry involutive) followed by the four coherence conditions.
pub fn catalogue() -> Vec<Axiom> {
    use Frobenius::*;
    use Obj::{X, Y};
    let xx = || Obj::tensor(X, X);
    let xy = || Obj::tensor(X, Y);
    vec![
        Axiom {
            name: "associativity",
            lhs: seq(vec![par(vec![g(Mu, X), id(X)]), g(Mu, X)]),
            rhs: seq(vec![par(vec![id(X), g(Mu, X)]), g(Mu, X)]),
        },
        Axiom {
            name: "left unitality",
            lhs: seq(vec![par(vec![g(Eta, X), id(X)]), g(Mu, X)]),
            rhs: id(X),
        },
        Axiom {
            name: "right unitality",
            lhs: seq(vec![par(vec![id(X), g(Eta, X)]), g(Mu, X)]),
            rhs: id(X),
        },
        Axiom {
            name: "commutativity",
            lhs: seq(vec![Term::Braid(X, X), g(Mu, X)]),
            rhs: g(Mu, X),
        },
        Axiom {
            name: "coassociativity",
            lhs: seq(vec![g(Delta, X), par(vec![g(Delta, X), id(X)])]),
            rhs: seq(vec![g(Delta, X), par(vec![id(X), g(Delta, X)])]),
        },
        Axiom {
            name: "left counitality",
            lhs: seq(vec![g(Delta, X), par(vec![g(Epsilon, X), id(X)])]),
            rhs: id(X),
        },
        Axiom {
            name: "right counitality",
            lhs: seq(vec![g(Delta, X), par(vec![id(X), g(Epsilon, X)])]),
            rhs: id(X),
        },
        Axiom {
            name: "cocommutativity",
            lhs: seq(vec![g(Delta, X), Term::Braid(X, X)]),
            rhs: g(Delta, X),
        },
        Axiom {
            name: "frobenius left",
            lhs: seq(vec![
                par(vec![g(Delta, X), id(X)]),
                par(vec![id(X), g(Mu, X)]),
            ]),
            rhs: seq(vec![g(Mu, X), g(Delta, X)]),
        },
        Axiom {
            name: "frobenius right",
            lhs: seq(vec![
                par(vec![id(X), g(Delta, X)]),
                par(vec![g(Mu, X), id(X)]),
            ]),
            rhs: seq(vec![g(Mu, X), g(Delta, X)]),
        },
        Axiom {
            name: "special",
            lhs: seq(vec![g(Delta, X), g(Mu, X)]),
            rhs: id(X),
        },
        Axiom {
            name: "symmetry involution",
            lhs: seq(vec![Term::Braid(X, X), Term::Braid(X, X)]),
            rhs: id(xx()),
        },
        Axiom {
            name: "coherence mu",
            lhs: g(Mu, xy()),
            rhs: seq(vec![
                par(vec![id(X), Term::Braid(Y, X), id(Y)]),
                par(vec![g(Mu, X), g(Mu, Y)]),
            ]),
        },
        Axiom {
            name: "coherence eta",
            lhs: g(Eta, xy()),
            rhs: par(vec![g(Eta, X), g(Eta, Y)]),
        },
        Axiom {
            name: "coherence delta",
            lhs: g(Delta, xy()),
            rhs: seq(vec![
                par(vec![g(Delta, X), g(Delta, Y)]),
                par(vec![id(X), Term::Braid(X, Y), id(Y)]),
            ]),
        },
        Axiom {
            name: "coherence epsilon",
            lhs: g(Epsilon, xy()),
            rhs: par(vec![g(Epsilon, X), g(Epsilon, Y)]),
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_shape() {
        let c = catalogue();
        assert_eq!(c.len(), 16);
        assert_eq!(c.iter().filter(|a| a.is_binary()).count(), 4);
        let names: std::collections::HashSet<_> = c.iter().map(|a| a.name).collect();
        assert_eq!(names.len(), 16);
    }

    #[test]
    fn display() {
        let t = seq(vec![
            par(vec![g(Frobenius::Mu, Obj::X), id(Obj::X)]),
            g(Frobenius::Mu, Obj::X),
        ]);
        assert_eq!(t.to_string(), "((mu[X] ⊗ id[X]) ; mu[X])");
    }
}
