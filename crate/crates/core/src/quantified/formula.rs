//! Quantified instances: QBF in CNF, quantified not-all-equal 3-SAT, and
//! QCSP over the triangle with unary lists.
//!
//! Variables are dense ids `0..n`; a prefix lists every variable exactly once.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::ColourSet;

pub type Var = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Quantifier {
    Forall,
    Exists,
}

impl Quantifier {
    pub fn flip(self) -> Quantifier {
        match self {
            Quantifier::Forall => Quantifier::Exists,
            Quantifier::Exists => Quantifier::Forall,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Quantifier::Forall => '∀',
            Quantifier::Exists => '∃',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<(Quantifier, Var)>", try_from = "Vec<(Quantifier, Var)>")]
pub struct Prefix {
    entries: Vec<(Quantifier, Var)>,
}

impl From<Prefix> for Vec<(Quantifier, Var)> {
    fn from(prefix: Prefix) -> Self {
        prefix.entries
    }
}

impl TryFrom<Vec<(Quantifier, Var)>> for Prefix {
    type Error = Error;

    fn try_from(entries: Vec<(Quantifier, Var)>) -> Result<Self> {
        Prefix::new(entries)
    }
}

impl Prefix {
    /// The entries must mention every variable of `0..entries.len()` once.
    pub fn new(entries: Vec<(Quantifier, Var)>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n];
        for &(_, v) in &entries {
            if v >= n {
                return Err(Error::InvalidFormula(format!(
                    "prefix variable {v} outside 0..{n}"
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidFormula(format!("variable {v} quantified twice")));
            }
        }
        Ok(Prefix { entries })
    }

    /// Variables `0..n` in order with the given quantifiers.
    pub fn from_quantifiers<I: IntoIterator<Item = Quantifier>>(qs: I) -> Self {
        Prefix {
            entries: qs.into_iter().enumerate().map(|(v, q)| (q, v)).collect(),
        }
    }

    pub fn entries(&self) -> &[(Quantifier, Var)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn var_count(&self) -> usize {
        self.entries.len()
    }

    /// Quantifier of each variable, indexed by variable id.
    pub fn quantifier_by_var(&self) -> Vec<Quantifier> {
        let mut out = vec![Quantifier::Exists; self.entries.len()];
        for &(q, v) in &self.entries {
            out[v] = q;
        }
        out
    }

    /// Position of each variable in the prefix, indexed by variable id.
    pub fn position_by_var(&self) -> Vec<usize> {
        let mut out = vec![0; self.entries.len()];
        for (i, &(_, v)) in self.entries.iter().enumerate() {
            out[v] = i;
        }
        out
    }

    /// Appends a fresh variable (id = current length) and returns it.
    pub fn push(&mut self, q: Quantifier) -> Var {
        let v = self.entries.len();
        self.entries.push((q, v));
        v
    }
}

impl fmt::Display for Prefix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (q, v) in &self.entries {
            write!(f, "{}x{v}", q.symbol())?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Literal {
    pub var: Var,
    pub negated: bool,
}

impl Literal {
    pub fn pos(var: Var) -> Self {
        Literal { var, negated: false }
    }

    pub fn neg(var: Var) -> Self {
        Literal { var, negated: true }
    }

    pub fn negate(self) -> Self {
        Literal {
            var: self.var,
            negated: !self.negated,
        }
    }

    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var] != self.negated
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "¬x{}", self.var)
        } else {
            write!(f, "x{}", self.var)
        }
    }
}

pub type Clause = Vec<Literal>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QbfInstance {
    pub prefix: Prefix,
    pub clauses: Vec<Clause>,
}

impl QbfInstance {
    pub fn new(prefix: Prefix, clauses: Vec<Clause>) -> Result<Self> {
        let inst = QbfInstance { prefix, clauses };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        Prefix::new(self.prefix.entries.clone())?;
        let n = self.prefix.len();
        for (i, clause) in self.clauses.iter().enumerate() {
            for lit in clause {
                if lit.var >= n {
                    return Err(Error::InvalidFormula(format!(
                        "clause {i} uses unquantified variable {}",
                        lit.var
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn var_count(&self) -> usize {
        self.prefix.len()
    }
}

impl fmt::Display for QbfInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.prefix)?;
        for clause in &self.clauses {
            f.write_str(" (")?;
            for (i, lit) in clause.iter().enumerate() {
                if i > 0 {
                    f.write_str("∨")?;
                }
                write!(f, "{lit}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// A not-all-equal argument: a literal or the constant false.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Term {
    Lit(Literal),
    False,
}

impl Term {
    pub fn eval(self, assignment: &[bool]) -> bool {
        match self {
            Term::Lit(l) => l.eval(assignment),
            Term::False => false,
        }
    }
}

impl From<Literal> for Term {
    fn from(l: Literal) -> Self {
        Term::Lit(l)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Lit(l) => write!(f, "{l}"),
            Term::False => f.write_str("F"),
        }
    }
}

/// Conjunction of NAE triples under a quantifier prefix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QnaeInstance {
    pub prefix: Prefix,
    pub triples: Vec<[Term; 3]>,
}

impl QnaeInstance {
    pub fn new(prefix: Prefix, triples: Vec<[Term; 3]>) -> Result<Self> {
        let inst = QnaeInstance { prefix, triples };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        Prefix::new(self.prefix.entries.clone())?;
        let n = self.prefix.len();
        for (i, triple) in self.triples.iter().enumerate() {
            for term in triple {
                if let Term::Lit(l) = term {
                    if l.var >= n {
                        return Err(Error::InvalidFormula(format!(
                            "triple {i} uses unquantified variable {}",
                            l.var
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn var_count(&self) -> usize {
        self.prefix.len()
    }
}

impl fmt::Display for QnaeInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.prefix)?;
        for [a, b, c] in &self.triples {
            write!(f, " NAE({a},{b},{c})")?;
        }
        Ok(())
    }
}

/// Conjunctive sentence over `K_3` (domain `{1,2,3}`) with edge atoms and
/// unary list atoms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QcspInstance {
    pub prefix: Prefix,
    pub edges: Vec<(Var, Var)>,
    pub lists: Vec<(Var, ColourSet)>,
}

impl QcspInstance {
    /// Builds an instance whose list atoms are restricted to `{1,2}` and `{1,3}`.
    pub fn new(prefix: Prefix, edges: Vec<(Var, Var)>, lists: Vec<(Var, ColourSet)>) -> Result<Self> {
        let inst = QcspInstance {
            prefix,
            edges,
            lists,
        };
        inst.validate(false)?;
        Ok(inst)
    }

    /// Builds an instance allowing any non-empty list `⊆ {1,2,3}`.
    pub fn new_with_any_lists(
        prefix: Prefix,
        edges: Vec<(Var, Var)>,
        lists: Vec<(Var, ColourSet)>,
    ) -> Result<Self> {
        let inst = QcspInstance {
            prefix,
            edges,
            lists,
        };
        inst.validate(true)?;
        Ok(inst)
    }

    pub fn validate(&self, any_lists: bool) -> Result<()> {
        Prefix::new(self.prefix.entries.clone())?;
        let n = self.prefix.len();
        for &(a, b) in &self.edges {
            if a >= n || b >= n {
                return Err(Error::InvalidFormula(format!(
                    "edge atom ({a},{b}) uses an unquantified variable"
                )));
            }
        }
        let one_two = ColourSet::from_colours([1, 2]);
        let one_three = ColourSet::from_colours([1, 3]);
        for &(v, set) in &self.lists {
            if v >= n {
                return Err(Error::InvalidFormula(format!(
                    "list atom on unquantified variable {v}"
                )));
            }
            let ok = if any_lists {
                !set.is_empty() && set.is_subset(ColourSet::full(3))
            } else {
                set == one_two || set == one_three
            };
            if !ok {
                return Err(Error::InvalidFormula(format!(
                    "list atom {{{set}}} on variable {v} is not allowed"
                )));
            }
        }
        Ok(())
    }

    pub fn var_count(&self) -> usize {
        self.prefix.len()
    }
}

impl fmt::Display for QcspInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.prefix)?;
        for (a, b) in &self.edges {
            write!(f, " E(x{a},x{b})")?;
        }
        for (v, set) in &self.lists {
            write!(f, " {{{set}}}(x{v})")?;
        }
        Ok(())
    }
}
