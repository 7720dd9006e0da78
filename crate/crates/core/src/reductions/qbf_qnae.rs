use std::ops::Range;

use crate::error::{Error, Result};
use crate::quantified::{Literal, QbfInstance, QnaeInstance, Quantifier, Term, Var};

/// A quantified NAE instance together with where each source clause went.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QnaeImage {
    pub instance: QnaeInstance,
    /// Triples produced by clause `i`.
    pub clause_triples: Vec<Range<usize>>,
    /// Fresh existential variables introduced for clause `i`.
    pub clause_fresh: Vec<Vec<Var>>,
}

/// Clause `l1 ∨ … ∨ lk` becomes `NAE(l1,F,F)` for `k = 1`, `NAE(l1,l2,F)` for
/// `k = 2`, and otherwise the chain `NAE(l1,l2,q1), NAE(¬q1,l3,q2), …,
/// NAE(¬q_{k-2},lk,F)` over fresh existential variables appended to the
/// prefix in clause order.
pub fn reduce_qbf_to_qnae(inst: &QbfInstance) -> Result<QnaeImage> {
    inst.validate()?;
    let mut prefix = inst.prefix.clone();
    let mut triples: Vec<[Term; 3]> = Vec::new();
    let mut clause_triples = Vec::with_capacity(inst.clauses.len());
    let mut clause_fresh = Vec::with_capacity(inst.clauses.len());
    for (i, clause) in inst.clauses.iter().enumerate() {
        let start = triples.len();
        let lit = |j: usize| Term::Lit(clause[j]);
        let mut fresh = Vec::new();
        match clause.len() {
            0 => return Err(Error::InvalidFormula(format!("clause {i} is empty"))),
            1 => triples.push([lit(0), Term::False, Term::False]),
            2 => triples.push([lit(0), lit(1), Term::False]),
            k => {
                fresh = (0..k - 2).map(|_| prefix.push(Quantifier::Exists)).collect();
                triples.push([lit(0), lit(1), Term::Lit(Literal::pos(fresh[0]))]);
                for j in 1..k - 2 {
                    triples.push([
                        Term::Lit(Literal::neg(fresh[j - 1])),
                        lit(j + 1),
                        Term::Lit(Literal::pos(fresh[j])),
                    ]);
                }
                triples.push([Term::Lit(Literal::neg(fresh[k - 3])), lit(k - 1), Term::False]);
            }
        }
        clause_triples.push(start..triples.len());
        clause_fresh.push(fresh);
    }
    Ok(QnaeImage {
        instance: QnaeInstance::new(prefix, triples)?,
        clause_triples,
        clause_fresh,
    })
}
