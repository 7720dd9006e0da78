//! Brute-force game evaluation of QBF and quantified NAE formulas, plus
//! prefix utilities.

use crate::error::{Error, Result};
use crate::quantified::formula::{Prefix, QbfInstance, QcspInstance, QnaeInstance, Quantifier, Term};

/// Largest prefix the boolean evaluators accept by default.
pub const DEFAULT_BOOLEAN_CAP: usize = 24;

pub fn qbf_eval(inst: &QbfInstance) -> Result<bool> {
    qbf_eval_with_cap(inst, DEFAULT_BOOLEAN_CAP)
}

pub fn qbf_eval_with_cap(inst: &QbfInstance, cap: usize) -> Result<bool> {
    inst.validate()?;
    check(inst.prefix.len(), cap)?;
    let position = inst.prefix.position_by_var();
    // A clause is decided once its latest variable is assigned.
    let mut due: Vec<Vec<usize>> = vec![Vec::new(); inst.prefix.len() + 1];
    for (i, clause) in inst.clauses.iter().enumerate() {
        let at = clause.iter().map(|l| position[l.var] + 1).max().unwrap_or(0);
        due[at].push(i);
    }
    let holds = |assignment: &[bool], i: usize| inst.clauses[i].iter().any(|l| l.eval(assignment));
    let mut assignment = vec![false; inst.prefix.len()];
    Ok(solve_boolean(&inst.prefix, &due, &holds, 0, &mut assignment))
}

/// Conjunction of the NAE triples; `F` is the constant false.
pub fn qnae_eval(inst: &QnaeInstance) -> Result<bool> {
    qnae_eval_with_cap(inst, DEFAULT_BOOLEAN_CAP)
}

pub fn qnae_eval_with_cap(inst: &QnaeInstance, cap: usize) -> Result<bool> {
    inst.validate()?;
    check(inst.prefix.len(), cap)?;
    let position = inst.prefix.position_by_var();
    let mut due: Vec<Vec<usize>> = vec![Vec::new(); inst.prefix.len() + 1];
    for (i, triple) in inst.triples.iter().enumerate() {
        let at = triple
            .iter()
            .filter_map(|t| match t {
                Term::Lit(l) => Some(position[l.var] + 1),
                Term::False => None,
            })
            .max()
            .unwrap_or(0);
        due[at].push(i);
    }
    let holds = |assignment: &[bool], i: usize| {
        let [a, b, c] = inst.triples[i].map(|t| t.eval(assignment));
        !(a == b && b == c)
    };
    let mut assignment = vec![false; inst.prefix.len()];
    Ok(solve_boolean(&inst.prefix, &due, &holds, 0, &mut assignment))
}

fn check(len: usize, cap: usize) -> Result<()> {
    if len > cap {
        return Err(Error::TooLarge {
            what: "prefix length",
            actual: len,
            cap,
        });
    }
    Ok(())
}

fn solve_boolean<F>(prefix: &Prefix, due: &[Vec<usize>], holds: &F, depth: usize, assignment: &mut [bool]) -> bool
where
    F: Fn(&[bool], usize) -> bool,
{
    if !due[depth].iter().all(|&i| holds(assignment, i)) {
        return false;
    }
    let Some(&(q, v)) = prefix.entries().get(depth) else {
        return true;
    };
    let outcome = |value: bool, assignment: &mut [bool]| {
        assignment[v] = value;
        solve_boolean(prefix, due, holds, depth + 1, assignment)
    };
    match q {
        Quantifier::Exists => outcome(false, assignment) || outcome(true, assignment),
        Quantifier::Forall => outcome(false, assignment) && outcome(true, assignment),
    }
}

/// Maximal runs of equal quantifiers.
pub fn alternation_blocks(prefix: &Prefix) -> Vec<(Quantifier, usize)> {
    let mut blocks: Vec<(Quantifier, usize)> = Vec::new();
    for &(q, _) in prefix.entries() {
        match blocks.last_mut() {
            Some((last, count)) if *last == q => *count += 1,
            _ => blocks.push((q, 1)),
        }
    }
    blocks
}

/// Leading block universal and at most `2k` blocks.
pub fn is_pi2k(prefix: &Prefix, k: usize) -> bool {
    let blocks = alternation_blocks(prefix);
    match blocks.first() {
        None => true,
        Some((Quantifier::Forall, _)) => blocks.len() <= 2 * k,
        Some(_) => false,
    }
}

/// Inserts fresh atom-free variables between equal adjacent quantifiers so the
/// prefix strictly alternates. Fresh ids continue after the existing ones.
pub fn pad_to_strict_alternation(inst: &QcspInstance) -> QcspInstance {
    let mut next = inst.prefix.len();
    let mut entries = Vec::with_capacity(2 * inst.prefix.len());
    for &(q, v) in inst.prefix.entries() {
        if let Some(&(last, _)) = entries.last() {
            if last == q {
                entries.push((q.flip(), next));
                next += 1;
            }
        }
        entries.push((q, v));
    }
    QcspInstance {
        prefix: Prefix::new(entries).expect("fresh ids are distinct"),
        edges: inst.edges.clone(),
        lists: inst.lists.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantified::formula::Literal;
    use Quantifier::*;

    fn qbf(qs: &[Quantifier], clauses: Vec<Vec<Literal>>) -> QbfInstance {
        QbfInstance::new(Prefix::from_quantifiers(qs.iter().copied()), clauses).unwrap()
    }

    #[test]
    fn qbf_examples() {
        let taut = qbf(&[Forall], vec![vec![Literal::pos(0), Literal::neg(0)]]);
        assert!(qbf_eval(&taut).unwrap());
        assert!(!qbf_eval(&qbf(&[Forall], vec![vec![Literal::pos(0)]])).unwrap());
        let mirror = qbf(
            &[Forall, Exists],
            vec![
                vec![Literal::pos(0), Literal::pos(1)],
                vec![Literal::neg(0), Literal::neg(1)],
            ],
        );
        assert!(qbf_eval(&mirror).unwrap());
        // Swapping the quantifier order breaks the mirror.
        let swapped = QbfInstance::new(
            Prefix::new(vec![(Exists, 1), (Forall, 0)]).unwrap(),
            mirror.clauses.clone(),
        )
        .unwrap();
        assert!(!qbf_eval(&swapped).unwrap());
        // Empty clause is false, empty CNF is true.
        assert!(!qbf_eval(&qbf(&[Exists], vec![vec![]])).unwrap());
        assert!(qbf_eval(&qbf(&[Forall], vec![])).unwrap());
    }

    #[test]
    fn qnae_examples() {
        let x = Term::Lit(Literal::pos(0));
        let p = Prefix::from_quantifiers([Exists]);
        let inst = QnaeInstance::new(p.clone(), vec![[x, Term::False, Term::False]]).unwrap();
        assert!(qnae_eval(&inst).unwrap());
        let inst = QnaeInstance::new(p, vec![[x, x, x]]).unwrap();
        assert!(!qnae_eval(&inst).unwrap());
        let y = Term::Lit(Literal::pos(1));
        let inst = QnaeInstance::new(
            Prefix::from_quantifiers([Forall, Exists]),
            vec![[x, y, Term::False]],
        )
        .unwrap();
        assert!(qnae_eval(&inst).unwrap());
    }

    #[test]
    fn caps() {
        let big = qbf(&[Exists; 30], vec![]);
        assert!(matches!(qbf_eval(&big), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn blocks() {
        let p = Prefix::from_quantifiers([Forall, Forall, Exists, Exists]);
        assert_eq!(alternation_blocks(&p), vec![(Forall, 2), (Exists, 2)]);
        assert!(is_pi2k(&p, 1));
        let p = Prefix::from_quantifiers([Exists, Forall, Exists]);
        assert!((1..5).all(|k| !is_pi2k(&p, k)));
        let p = Prefix::from_quantifiers([Forall, Exists, Forall, Exists]);
        assert_eq!(alternation_blocks(&p).len(), 4);
        assert!(!is_pi2k(&p, 1));
        assert!(is_pi2k(&p, 2));
    }

    #[test]
    fn padding() {
        let inst = QcspInstance::new(Prefix::from_quantifiers([Exists, Exists]), vec![], vec![]).unwrap();
        let padded = pad_to_strict_alternation(&inst);
        let qs: Vec<Quantifier> = padded.prefix.entries().iter().map(|e| e.0).collect();
        assert_eq!(qs, vec![Exists, Forall, Exists]);
        assert_eq!(padded.prefix.entries()[1].1, 2);

        let alt = QcspInstance::new(Prefix::from_quantifiers([Exists, Forall]), vec![(0, 1)], vec![]).unwrap();
        assert_eq!(pad_to_strict_alternation(&alt), alt);

        let three = QcspInstance::new(Prefix::from_quantifiers([Forall; 3]), vec![], vec![]).unwrap();
        let qs: Vec<Quantifier> = pad_to_strict_alternation(&three)
            .prefix
            .entries()
            .iter()
            .map(|e| e.0)
            .collect();
        assert_eq!(qs, vec![Forall, Exists, Forall, Exists, Forall]);
    }
}
