use evoscape_core::{BitString, Landscape, NeighborhoodCursor};

use crate::{CnfFormula, MaxSatError};

/// A CNF formula viewed as a landscape over assignments.
///
/// Fitness is the satisfied-clause count. The struct precomputes, for every
/// variable, the packed list of clauses it appears in (clause id shifted
/// left, low bit = polarity), laid out contiguously with an offset table.
/// Flip effects then touch only the clauses containing the flipped variable.
pub struct MaxSatLandscape {
    formula: CnfFormula,
    offsets: Vec<u32>,
    entries: Vec<u32>,
}

impl MaxSatLandscape {
    pub fn new(formula: CnfFormula) -> Self {
        let num_vars = formula.num_vars();
        let mut counts = vec![0u32; num_vars + 1];
        for clause in formula.clauses() {
            for literal in clause {
                counts[literal.bit_index() + 1] += 1;
            }
        }
        let mut offsets = counts;
        for i in 1..offsets.len() {
            offsets[i] += offsets[i - 1];
        }
        let mut entries = vec![0u32; offsets[num_vars] as usize];
        let mut cursor = offsets.clone();
        for (clause_id, clause) in formula.clauses().iter().enumerate() {
            for literal in clause {
                let slot = cursor[literal.bit_index()];
                entries[slot as usize] =
                    ((clause_id as u32) << 1) | u32::from(literal.is_positive());
                cursor[literal.bit_index()] += 1;
            }
        }
        Self {
            formula,
            offsets,
            entries,
        }
    }

    pub fn formula(&self) -> &CnfFormula {
        &self.formula
    }

    fn occurrences(&self, bit: usize) -> &[u32] {
        &self.entries[self.offsets[bit] as usize..self.offsets[bit + 1] as usize]
    }

    /// Change in satisfied-clause count if `bit` of `s` were flipped,
    /// without evaluating the whole formula. Panics if `bit` is out of
    /// range, mirroring `BitString::flip`.
    pub fn flip_delta(&self, s: &BitString, bit: usize) -> Result<i64, MaxSatError> {
        if s.len() != self.formula.num_vars() {
            return Err(MaxSatError::AssignmentLength {
                expected: self.formula.num_vars(),
                actual: s.len(),
            });
        }
        assert!(bit < s.len(), "bit index {bit} out of range");
        let mut delta = 0i64;
        for &entry in self.occurrences(bit) {
            let clause = &self.formula.clauses()[(entry >> 1) as usize];
            let satisfied_now = s.bit(bit) == (entry & 1 == 1);
            let others_satisfy = clause
                .iter()
                .any(|l| l.bit_index() != bit && l.satisfied_by(s));
            if !others_satisfy {
                delta += if satisfied_now { -1 } else { 1 };
            }
        }
        Ok(delta)
    }
}

impl Landscape for MaxSatLandscape {
    fn dimension(&self) -> usize {
        self.formula.num_vars()
    }

    fn fitness(&self, s: &BitString) -> f64 {
        self.formula
            .evaluate(s)
            .expect("solution does not match landscape dimension") as f64
    }

    fn cursor(&self, start: BitString) -> Box<dyn NeighborhoodCursor + '_> {
        Box::new(DeltaCursor::new(self, start))
    }
}

/// Walk-position cursor holding per-clause satisfied-literal counts.
///
/// A move touches only the clauses of the flipped variable, and one full
/// neighbor scan touches each occurrence entry once, so both cost O(sum of
/// occurrence-list lengths involved) rather than O(num_clauses * k).
struct DeltaCursor<'a> {
    landscape: &'a MaxSatLandscape,
    current: BitString,
    satisfied_literals: Vec<u32>,
    fitness: u64,
    scan: Vec<f64>,
    scan_valid: bool,
}

impl<'a> DeltaCursor<'a> {
    fn new(landscape: &'a MaxSatLandscape, start: BitString) -> Self {
        assert_eq!(
            start.len(),
            landscape.dimension(),
            "start solution does not match landscape dimension"
        );
        let formula = &landscape.formula;
        let mut satisfied_literals = vec![0u32; formula.num_clauses()];
        for (count, clause) in satisfied_literals.iter_mut().zip(formula.clauses()) {
            *count = clause.iter().filter(|l| l.satisfied_by(&start)).count() as u32;
        }
        let fitness = satisfied_literals.iter().filter(|&&c| c > 0).count() as u64;
        let dimension = landscape.dimension();
        Self {
            landscape,
            current: start,
            satisfied_literals,
            fitness,
            scan: vec![0.0; dimension],
            scan_valid: false,
        }
    }

    fn delta(&self, bit: usize) -> i64 {
        let mut delta = 0i64;
        for &entry in self.landscape.occurrences(bit) {
            let count = self.satisfied_literals[(entry >> 1) as usize];
            let satisfied_now = self.current.bit(bit) == (entry & 1 == 1);
            if satisfied_now {
                if count == 1 {
                    delta -= 1;
                }
            } else if count == 0 {
                delta += 1;
            }
        }
        delta
    }
}

impl NeighborhoodCursor for DeltaCursor<'_> {
    fn solution(&self) -> &BitString {
        &self.current
    }

    fn fitness(&self) -> f64 {
        self.fitness as f64
    }

    fn neighbor_fitnesses(&mut self) -> &[f64] {
        if !self.scan_valid {
            for bit in 0..self.current.len() {
                self.scan[bit] = (self.fitness as i64 + self.delta(bit)) as f64;
            }
            self.scan_valid = true;
        }
        &self.scan
    }

    fn move_to_neighbor(&mut self, bit: usize) {
        assert!(bit < self.current.len(), "bit index {bit} out of range");
        for &entry in self.landscape.occurrences(bit) {
            let clause = (entry >> 1) as usize;
            let satisfied_now = self.current.bit(bit) == (entry & 1 == 1);
            if satisfied_now {
                self.satisfied_literals[clause] -= 1;
                if self.satisfied_literals[clause] == 0 {
                    self.fitness -= 1;
                }
            } else {
                if self.satisfied_literals[clause] == 0 {
                    self.fitness += 1;
                }
                self.satisfied_literals[clause] += 1;
            }
        }
        self.current.flip(bit);
        self.scan_valid = false;
    }
}
