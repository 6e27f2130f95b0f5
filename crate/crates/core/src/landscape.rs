use crate::BitString;

/// A fitness landscape over fixed-length bit strings.
///
/// The neighborhood is always the `dimension()` Hamming-1 flips; a solution
/// is never its own neighbor. Implementations must be deterministic:
/// evaluating the same solution twice yields the same value. Values are
/// immutable after construction, so all methods are safe to call from any
/// number of threads.
pub trait Landscape: Send + Sync {
    /// Number of bits per solution.
    fn dimension(&self) -> usize;

    /// Fitness of `s`. Panics if `s.len() != self.dimension()`.
    fn fitness(&self, s: &BitString) -> f64;

    /// Positioned evaluator for walking the landscape. The cursor owns
    /// whatever scratch state its evaluator needs, so each walker gets its
    /// own and cursors never share mutable state.
    fn cursor(&self, start: BitString) -> Box<dyn NeighborhoodCursor + '_>;
}

/// A cursor sitting on one solution, able to report the fitness of every
/// Hamming-1 neighbor and to move to one of them.
///
/// `neighbor_fitnesses` caches its scan until the cursor moves, so asking
/// twice at the same position costs one scan.
pub trait NeighborhoodCursor {
    fn solution(&self) -> &BitString;

    fn fitness(&self) -> f64;

    /// Fitness of each neighbor, ascending bit index; `result[i]` is the
    /// fitness of the current solution with bit `i` flipped.
    fn neighbor_fitnesses(&mut self) -> &[f64];

    /// Move to the neighbor obtained by flipping `bit`.
    /// Panics if `bit` is out of range.
    fn move_to_neighbor(&mut self, bit: usize);
}

/// Cursor that evaluates neighbors by full re-evaluation, one flip at a
/// time. Works for any landscape; evaluators with cheaper incremental
/// scans provide their own cursor instead.
pub struct FullScanCursor<'a> {
    landscape: &'a dyn Landscape,
    current: BitString,
    fitness: f64,
    scan: Vec<f64>,
    scan_valid: bool,
}

impl<'a> FullScanCursor<'a> {
    pub fn new(landscape: &'a dyn Landscape, start: BitString) -> Self {
        assert_eq!(
            start.len(),
            landscape.dimension(),
            "start solution does not match landscape dimension"
        );
        let fitness = landscape.fitness(&start);
        FullScanCursor {
            landscape,
            current: start,
            fitness,
            scan: Vec::new(),
            scan_valid: false,
        }
    }
}

impl NeighborhoodCursor for FullScanCursor<'_> {
    fn solution(&self) -> &BitString {
        &self.current
    }

    fn fitness(&self) -> f64 {
        self.fitness
    }

    fn neighbor_fitnesses(&mut self) -> &[f64] {
        if !self.scan_valid {
            self.scan.clear();
            for bit in 0..self.current.len() {
                self.current.flip(bit);
                self.scan.push(self.landscape.fitness(&self.current));
                self.current.flip(bit);
            }
            self.scan_valid = true;
        }
        &self.scan
    }

    fn move_to_neighbor(&mut self, bit: usize) {
        assert!(bit < self.current.len(), "bit index out of range");
        self.current.flip(bit);
        self.fitness = if self.scan_valid {
            self.scan[bit]
        } else {
            self.landscape.fitness(&self.current)
        };
        self.scan_valid = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::PopcountLandscape;

    #[test]
    fn full_scan_cursor_tracks_fitness() {
        let landscape = PopcountLandscape::new(4);
        let mut cursor = landscape.cursor("0000".parse().unwrap());
        assert_eq!(cursor.fitness(), 0.0);
        assert_eq!(cursor.neighbor_fitnesses(), &[1.0, 1.0, 1.0, 1.0]);
        cursor.move_to_neighbor(2);
        assert_eq!(cursor.solution().to_string(), "0010");
        assert_eq!(cursor.fitness(), 1.0);
        assert_eq!(cursor.neighbor_fitnesses(), &[2.0, 2.0, 0.0, 2.0]);
    }

    #[test]
    fn move_without_scan_reevaluates() {
        let landscape = PopcountLandscape::new(3);
        let mut cursor = landscape.cursor("000".parse().unwrap());
        cursor.move_to_neighbor(1);
        cursor.move_to_neighbor(2);
        assert_eq!(cursor.fitness(), 2.0);
        assert_eq!(cursor.solution().to_string(), "011");
    }

    #[test]
    #[should_panic(expected = "dimension")]
    fn cursor_rejects_wrong_length() {
        let landscape = PopcountLandscape::new(4);
        let _ = landscape.cursor("000".parse().unwrap());
    }
}
