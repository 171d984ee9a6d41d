//! Upper estimates of the absolute state complexity: the minimum of the
//! state complexity over coordinate permutations.
//!
//! All candidate permutations are drawn sequentially from a seeded
//! generator before any evaluation, so the result is the same whether the
//! evaluations run on one thread or many.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::profile::StateProfile;

/// Longest code accepted by [`Strategy::Exhaustive`].
pub const MAX_EXHAUSTIVE_LENGTH: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Exhaustive,
    Random,
    Greedy,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Exhaustive => "exhaustive",
            Strategy::Random => "random",
            Strategy::Greedy => "greedy",
        })
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "exhaustive" => Ok(Strategy::Exhaustive),
            "random" => Ok(Strategy::Random),
            "greedy" => Ok(Strategy::Greedy),
            other => Err(format!("unknown strategy '{other}'")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    /// Smallest state complexity seen; equals the absolute state
    /// complexity when `exact`.
    pub best_s: usize,
    /// Zero-based; column `j` of the best code is column `best_permutation[j]`.
    pub best_permutation: Vec<usize>,
    pub evaluations: u64,
    pub strategy: Strategy,
    pub exact: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    pub strategy: Strategy,
    /// Number of profile evaluations for `random` and `greedy`.
    pub budget: u64,
    pub seed: u64,
    pub execution: Execution,
}

impl SearchConfig {
    pub fn new(strategy: Strategy, budget: u64, seed: u64) -> SearchConfig {
        SearchConfig {
            strategy,
            budget,
            seed,
            execution: Execution::default(),
        }
    }

    pub fn with_execution(mut self, execution: Execution) -> SearchConfig {
        self.execution = execution;
        self
    }
}

/// Ordering key of a permuted code: state complexity first, then the sum
/// of the profile so that hill-climbing can move across plateaus.
fn score(code: &LinearCode, perm: &[usize]) -> (usize, usize) {
    let p = StateProfile::of(&code.permute(perm).expect("valid permutation"));
    (p.s_max, p.state.iter().sum())
}

pub fn absolute_complexity_search(code: &LinearCode, cfg: &SearchConfig) -> Result<SearchResult> {
    if cfg.budget == 0 {
        return Err(Error::BudgetZero);
    }
    match cfg.strategy {
        Strategy::Exhaustive => exhaustive(code, cfg.execution),
        Strategy::Random => {
            let perms = sample_permutations(code.length(), cfg.budget as usize, cfg.seed);
            let (best, key) = best_of(code, &perms, cfg.execution);
            Ok(SearchResult {
                best_s: key.0,
                best_permutation: perms[best].clone(),
                evaluations: perms.len() as u64,
                strategy: Strategy::Random,
                exact: false,
            })
        }
        Strategy::Greedy => greedy(code, cfg),
    }
}

/// `count` permutations of `0..n`; the first is the identity.
pub fn sample_permutations(n: usize, count: usize, seed: u64) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let identity: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(count);
    if count > 0 {
        out.push(identity.clone());
    }
    while out.len() < count {
        let mut p = identity.clone();
        p.shuffle(&mut rng);
        out.push(p);
    }
    out
}

fn best_of(code: &LinearCode, perms: &[Vec<usize>], exec: Execution) -> (usize, (usize, usize)) {
    exec.min_by_key(perms.len(), |i| {
        let key = score(code, &perms[i]);
        (key, key)
    })
    .expect("at least one permutation")
}

fn exhaustive(code: &LinearCode, exec: Execution) -> Result<SearchResult> {
    let n = code.length();
    if n > MAX_EXHAUSTIVE_LENGTH {
        return Err(Error::ExhaustiveTooLarge {
            n,
            max: MAX_EXHAUSTIVE_LENGTH,
        });
    }
    let total: usize = (1..=n).product();
    let (best, key) = exec
        .min_by_key(total, |rank| {
            let key = score(code, &nth_permutation(n, rank));
            (key.0, key)
        })
        .expect("n! >= 1");
    Ok(SearchResult {
        best_s: key.0,
        best_permutation: nth_permutation(n, best),
        evaluations: total as u64,
        strategy: Strategy::Exhaustive,
        exact: true,
    })
}

/// The permutation of `0..n` with lexicographic rank `rank`.
pub fn nth_permutation(n: usize, mut rank: usize) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..n).collect();
    let mut fact: Vec<usize> = vec![1; n + 1];
    for i in 1..=n {
        fact[i] = fact[i - 1] * i;
    }
    let mut out = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let idx = rank / fact[i];
        rank %= fact[i];
        out.push(pool.remove(idx));
    }
    out
}

/// Random sampling with a quarter of the budget, then steepest-descent
/// over adjacent transpositions from the best sample until no neighbour
/// improves or the budget runs out.
fn greedy(code: &LinearCode, cfg: &SearchConfig) -> Result<SearchResult> {
    let n = code.length();
    let samples = (cfg.budget / 4).max(1) as usize;
    let perms = sample_permutations(n, samples, cfg.seed);
    let (best, mut key) = best_of(code, &perms, cfg.execution);
    let mut current = perms[best].clone();
    let mut evaluations = samples as u64;
    let neighbours = n.saturating_sub(1);
    while neighbours > 0 && evaluations + neighbours as u64 <= cfg.budget {
        let (i, nkey) = cfg
            .execution
            .min_by_key(neighbours, |i| {
                let mut p = current.clone();
                p.swap(i, i + 1);
                let key = score(code, &p);
                (key, key)
            })
            .expect("at least one neighbour");
        evaluations += neighbours as u64;
        if nkey >= key {
            break;
        }
        current.swap(i, i + 1);
        key = nkey;
    }
    Ok(SearchResult {
        best_s: key.0,
        best_permutation: current,
        evaluations,
        strategy: Strategy::Greedy,
        exact: false,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::field::Field;

    fn gf2() -> Arc<Field> {
        Field::shared(2, 1).unwrap()
    }

    fn hamming() -> LinearCode {
        LinearCode::from_rows(
            gf2(),
            &[
                vec![1, 0, 0, 0, 1, 1, 0],
                vec![0, 1, 0, 0, 1, 0, 1],
                vec![0, 0, 1, 0, 0, 1, 1],
                vec![0, 0, 0, 1, 1, 1, 1],
            ],
        )
        .unwrap()
    }

    #[test]
    fn permutation_ranks_cover_all_orders() {
        let mut seen: Vec<Vec<usize>> = (0..24).map(|r| nth_permutation(4, r)).collect();
        assert_eq!(seen[0], vec![0, 1, 2, 3]);
        assert_eq!(seen[23], vec![3, 2, 1, 0]);
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 24);
    }

    #[test]
    fn repetition_exhaustive() {
        let rep = LinearCode::from_rows(gf2(), &[vec![1, 1, 1]]).unwrap();
        let r = absolute_complexity_search(&rep, &SearchConfig::new(Strategy::Exhaustive, 1, 0))
            .unwrap();
        assert_eq!(r.best_s, 1);
        assert_eq!(r.evaluations, 6);
        assert!(r.exact);
    }

    #[test]
    fn hamming_exhaustive_matches_brute_force_minimum() {
        let h = hamming();
        let r =
            absolute_complexity_search(&h, &SearchConfig::new(Strategy::Exhaustive, 1, 0)).unwrap();
        let brute = (0..5040)
            .map(|i| StateProfile::of(&h.permute(&nth_permutation(7, i)).unwrap()).s_max)
            .min()
            .unwrap();
        assert_eq!(r.best_s, brute);
        assert_eq!(r.evaluations, 5040);
        let best = StateProfile::of(&h.permute(&r.best_permutation).unwrap());
        assert_eq!(best.s_max, r.best_s);
    }

    #[test]
    fn errors() {
        let h = hamming();
        assert_eq!(
            absolute_complexity_search(&h, &SearchConfig::new(Strategy::Random, 0, 0)).unwrap_err(),
            Error::BudgetZero
        );
        let long = LinearCode::from_rows(gf2(), &[vec![1; 9]]).unwrap();
        assert_eq!(
            absolute_complexity_search(&long, &SearchConfig::new(Strategy::Exhaustive, 10, 0))
                .unwrap_err(),
            Error::ExhaustiveTooLarge { n: 9, max: 8 }
        );
    }

    #[test]
    fn seeded_search_is_reproducible_across_modes() {
        let h = hamming();
        for strategy in [Strategy::Random, Strategy::Greedy] {
            let base = SearchConfig::new(strategy, 60, 42);
            let a = absolute_complexity_search(&h, &base.with_execution(Execution::Sequential))
                .unwrap();
            let b =
                absolute_complexity_search(&h, &base.with_execution(Execution::Parallel)).unwrap();
            assert_eq!(a, b);
            assert!(a.evaluations <= 60);
            let check = StateProfile::of(&h.permute(&a.best_permutation).unwrap());
            assert_eq!(check.s_max, a.best_s);
        }
    }

    #[test]
    fn strategies_parse() {
        assert_eq!("greedy".parse::<Strategy>().unwrap(), Strategy::Greedy);
        assert!("annealing".parse::<Strategy>().is_err());
    }
}
