use super::{
    theorem1_pair_sigma, theorem2_sigma, CalcError, ExponentPair, FractionalObjective,
    LinearConstraint, PairEntry, PairSet, Rational,
};
use crate::exec::Execution;

/// Anything that maps an exponent pair to an exact value to be minimized.
pub trait Objective: Sync {
    /// `Err` marks the pair as outside the objective's domain.
    fn evaluate(&self, p: &ExponentPair) -> Result<Rational, CalcError>;
}

impl Objective for FractionalObjective {
    fn evaluate(&self, p: &ExponentPair) -> Result<Rational, CalcError> {
        self.eval(p)
    }
}

/// The full threshold of one of the two moment theorems, including its
/// hypothesis as the domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremObjective {
    One,
    Two,
}

impl TheoremObjective {
    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(TheoremObjective::One),
            2 => Some(TheoremObjective::Two),
            _ => None,
        }
    }
}

impl Objective for TheoremObjective {
    fn evaluate(&self, p: &ExponentPair) -> Result<Rational, CalcError> {
        match self {
            TheoremObjective::One => theorem1_pair_sigma(p),
            TheoremObjective::Two => theorem2_sigma(p),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Optimum {
    pub entry: PairEntry,
    pub value: Rational,
}

/// Minimize `objective` over `pairs`, restricted to pairs satisfying
/// `constraint` and lying in the objective's domain.
///
/// Ties are broken by `(value, k, ℓ)`, so the result does not depend on the
/// order of `pairs` or on `exec`.
pub fn optimize<O: Objective + ?Sized>(
    objective: &O,
    pairs: &PairSet,
    constraint: Option<&LinearConstraint>,
    exec: Execution,
) -> Result<Optimum, CalcError> {
    let values: Vec<Option<Rational>> = exec.map(pairs.entries(), |e| {
        if constraint.is_some_and(|c| !c.holds(&e.pair)) {
            return None;
        }
        objective.evaluate(&e.pair).ok()
    });
    pairs
        .entries()
        .iter()
        .zip(values)
        .filter_map(|(e, v)| v.map(|v| (e, v)))
        .min_by(|(ea, va), (eb, vb)| {
            (va, ea.pair.k(), ea.pair.l()).cmp(&(vb, eb.pair.k(), eb.pair.l()))
        })
        .map(|(e, value)| Optimum {
            entry: e.clone(),
            value,
        })
        .ok_or(CalcError::EmptyFeasibleSet)
}

#[cfg(test)]
mod tests {
    use super::super::{enumerate_pairs, parse_constraint, parse_objective, q_family_set, rat};
    use super::*;

    #[test]
    fn q_family_optimum_is_q3() {
        let set = q_family_set(2..=10).unwrap();
        let obj = parse_objective("(11k + l + 1)/(8k + 2)").unwrap();
        let best = optimize(&obj, &set, None, Execution::Serial).unwrap();
        assert_eq!(best.entry.seed, "q=3");
        assert_eq!(best.value, rat(1953, 1984));
        let by_theorem = optimize(&TheoremObjective::Two, &set, None, Execution::Serial).unwrap();
        assert_eq!(by_theorem, best);
    }

    #[test]
    fn depth_two_with_constraint() {
        let seeds = PairSet::from_seed_names(&["trivial"]).unwrap();
        let set = enumerate_pairs(&seeds, 2, Execution::Serial);
        let obj = parse_objective("(5k + l)/(4k + 1)").unwrap();
        let c = parse_constraint("k + l < 1").unwrap();
        let best = optimize(&obj, &set, Some(&c), Execution::Serial).unwrap();
        assert_eq!(best.entry.pair.point(), (&rat(1, 6), &rat(2, 3)));
        assert_eq!(best.value, rat(9, 10));
    }

    #[test]
    fn empty_feasible_set_is_an_error() {
        let seeds = PairSet::from_seed_names(&["trivial"]).unwrap();
        let obj = parse_objective("(5k + l)/(4k + 1)").unwrap();
        let c = parse_constraint("k + l < 1").unwrap();
        assert_eq!(
            optimize(&obj, &seeds, Some(&c), Execution::Serial),
            Err(CalcError::EmptyFeasibleSet)
        );
        assert_eq!(
            optimize(&obj, &PairSet::default(), None, Execution::Serial),
            Err(CalcError::EmptyFeasibleSet)
        );
    }
}
