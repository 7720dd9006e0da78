use crate::error::{Error, Result};
use crate::graph::ColourSet;
use crate::quantified::arena::{Arena, Player, UniversalRule};
use crate::quantified::formula::{QcspInstance, Quantifier};

/// Largest prefix the QCSP evaluator accepts by default.
pub const DEFAULT_QCSP_CAP: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QcspOptions {
    /// Accept any non-empty list atom `⊆ {1,2,3}`, not just `{1,2}` and `{1,3}`.
    pub any_lists: bool,
    pub cap: usize,
}

impl Default for QcspOptions {
    fn default() -> Self {
        QcspOptions {
            any_lists: false,
            cap: DEFAULT_QCSP_CAP,
        }
    }
}

/// Truth of the sentence on `K_3`.
pub fn qcsp_eval(inst: &QcspInstance) -> Result<bool> {
    qcsp_eval_with(inst, QcspOptions::default())
}

pub fn qcsp_eval_with(inst: &QcspInstance, options: QcspOptions) -> Result<bool> {
    Ok(arena(inst, options)?.existential_wins(&[]))
}

/// Values for the next variable in the prefix that keep its player winning,
/// given values for the variables before it (in prefix order). For a universal
/// variable this includes values that violate a list atom outright.
pub fn qcsp_best_moves(inst: &QcspInstance, assigned: &[u8]) -> Result<ColourSet> {
    let arena = arena(inst, QcspOptions::default())?;
    if assigned.len() >= arena.len() {
        return Err(Error::Precondition(format!(
            "all {} variables are already assigned",
            arena.len()
        )));
    }
    for (i, &c) in assigned.iter().enumerate() {
        if !(1..=3).contains(&c) {
            return Err(Error::Precondition(format!("value {c} at prefix position {i} is not in 1..=3")));
        }
    }
    Ok(arena.winning_moves(assigned))
}

fn arena(inst: &QcspInstance, options: QcspOptions) -> Result<Arena> {
    inst.validate(options.any_lists)?;
    let n = inst.prefix.len();
    if n > options.cap {
        return Err(Error::TooLarge {
            what: "prefix length",
            actual: n,
            cap: options.cap,
        });
    }
    let position = inst.prefix.position_by_var();
    let player = inst
        .prefix
        .entries()
        .iter()
        .map(|&(q, _)| match q {
            Quantifier::Exists => Player::Existential,
            Quantifier::Forall => Player::Universal,
        })
        .collect();
    let mut allowed = vec![ColourSet::full(3); n];
    for &(v, set) in &inst.lists {
        let p = position[v];
        allowed[p] = allowed[p].intersection(set);
    }
    let pairs = inst.edges.iter().map(|&(a, b)| (position[a], position[b]));
    Ok(Arena::new(3, player, allowed, pairs, UniversalRule::AnyValue))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantified::formula::Prefix;
    use Quantifier::*;

    fn inst(qs: &[Quantifier], edges: Vec<(usize, usize)>, lists: Vec<(usize, ColourSet)>) -> QcspInstance {
        QcspInstance::new(Prefix::from_quantifiers(qs.iter().copied()), edges, lists).unwrap()
    }

    #[test]
    fn small_sentences() {
        assert!(qcsp_eval(&inst(&[Forall, Exists], vec![(0, 1)], vec![])).unwrap());
        assert!(!qcsp_eval(&inst(&[Forall, Forall], vec![(0, 1)], vec![])).unwrap());
        let both = vec![
            (0, ColourSet::from_colours([1, 2])),
            (0, ColourSet::from_colours([1, 3])),
        ];
        assert!(qcsp_eval(&inst(&[Exists], vec![], both)).unwrap());
        assert!(!qcsp_eval(&inst(&[Exists], vec![(0, 0)], vec![])).unwrap());
    }

    #[test]
    fn universal_list_atom_is_false() {
        let one_two = ColourSet::from_colours([1, 2]);
        assert!(!qcsp_eval(&inst(&[Forall], vec![], vec![(0, one_two)])).unwrap());
        assert_eq!(
            qcsp_best_moves(&inst(&[Forall], vec![], vec![(0, one_two)]), &[]).unwrap(),
            ColourSet::from_colours([3])
        );
    }

    #[test]
    fn any_lists_behind_flag() {
        let only_two = QcspInstance {
            prefix: Prefix::from_quantifiers([Exists]),
            edges: vec![],
            lists: vec![(0, ColourSet::from_colours([2]))],
        };
        assert!(qcsp_eval(&only_two).is_err());
        let options = QcspOptions {
            any_lists: true,
            ..QcspOptions::default()
        };
        assert!(qcsp_eval_with(&only_two, options).unwrap());
    }

    #[test]
    fn best_moves_for_existential() {
        // ∃x ∀u ∃y: E(x,y) E(u,y). Any x works: y avoids x and u.
        let i = inst(&[Exists, Forall, Exists], vec![(0, 2), (1, 2)], vec![]);
        assert!(qcsp_eval(&i).unwrap());
        assert_eq!(qcsp_best_moves(&i, &[]).unwrap(), ColourSet::full(3));
        assert_eq!(qcsp_best_moves(&i, &[1, 2]).unwrap(), ColourSet::from_colours([3]));
        assert!(qcsp_best_moves(&i, &[1, 2, 3]).is_err());
    }
}
