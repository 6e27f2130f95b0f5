use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{CnfFormula, Literal, MaxSatError};

/// Parameters for one uniform random MAX-k-SAT instance.
///
/// Each clause draws `literals_per_clause` distinct variables uniformly
/// without replacement, then negates each independently with probability
/// one half. Clauses are drawn independently, so duplicate clauses can
/// occur, matching the standard random model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InstanceSpec {
    pub num_vars: usize,
    pub num_clauses: usize,
    pub literals_per_clause: usize,
    pub seed: u64,
}

/// Uniform draw from `0..n` by rejection on the raw 64-bit stream. Written
/// out here, rather than via `Rng::random_range`, so generated instances are
/// a function of the ChaCha8 stream alone and survive rand upgrades.
fn uniform_below(rng: &mut impl RngCore, n: u64) -> u64 {
    debug_assert!(n > 0);
    let zone = u64::MAX - ((u64::MAX % n + 1) % n);
    loop {
        let v = rng.next_u64();
        if v <= zone {
            return v % n;
        }
    }
}

fn coin(rng: &mut impl RngCore) -> bool {
    rng.next_u64() & 1 == 1
}

impl InstanceSpec {
    /// Generates the instance. The same spec always yields the same formula.
    pub fn generate(&self) -> Result<CnfFormula, MaxSatError> {
        if self.num_vars == 0 {
            return Err(MaxSatError::NoVariables);
        }
        if self.literals_per_clause == 0 {
            return Err(MaxSatError::ZeroLiteralsPerClause);
        }
        if self.literals_per_clause > self.num_vars {
            return Err(MaxSatError::ClauseWiderThanFormula {
                literals_per_clause: self.literals_per_clause,
                num_vars: self.num_vars,
            });
        }
        assert!(
            self.num_vars <= i32::MAX as usize,
            "variable numbers must fit in a literal code"
        );

        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let k = self.literals_per_clause;
        let mut pool: Vec<u32> = (1..=self.num_vars as u32).collect();
        let mut swaps = Vec::with_capacity(k);
        let mut clauses = Vec::with_capacity(self.num_clauses);

        for _ in 0..self.num_clauses {
            // Partial Fisher-Yates picks k distinct variables in O(k); the
            // swaps are undone afterwards so every clause starts from the
            // same pool order.
            swaps.clear();
            for j in 0..k {
                let r = j + uniform_below(&mut rng, (self.num_vars - j) as u64) as usize;
                pool.swap(j, r);
                swaps.push((j, r));
            }
            let mut clause: Vec<Literal> =
                pool[..k].iter().map(|&v| Literal::new(v as i32)).collect();
            for literal in &mut clause {
                if coin(&mut rng) {
                    *literal = literal.negated();
                }
            }
            for &(j, r) in swaps.iter().rev() {
                pool.swap(j, r);
            }
            clauses.push(clause);
        }

        CnfFormula::new(self.num_vars, clauses)
    }
}
