//! Small closed-form landscapes used as test fixtures.

use crate::{BitString, FullScanCursor, Landscape, NeighborhoodCursor};

/// Every solution has the same fitness. The most neutral landscape possible:
/// every edge is neutral, the whole hypercube is one neutral network.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantLandscape {
    dimension: usize,
    value: f64,
}

impl ConstantLandscape {
    pub fn new(dimension: usize, value: f64) -> Self {
        assert!(dimension > 0, "landscape dimension must be positive");
        Self { dimension, value }
    }
}

impl Landscape for ConstantLandscape {
    fn dimension(&self) -> usize {
        self.dimension
    }

    fn fitness(&self, s: &BitString) -> f64 {
        assert_eq!(
            s.len(),
            self.dimension,
            "solution does not match landscape dimension"
        );
        self.value
    }

    fn cursor(&self, start: BitString) -> Box<dyn NeighborhoodCursor + '_> {
        Box::new(FullScanCursor::new(self, start))
    }
}

/// Fitness is the number of ones. Smooth, single-peaked, and entirely free of
/// neutrality: every flip changes fitness by exactly one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PopcountLandscape {
    dimension: usize,
}

impl PopcountLandscape {
    pub fn new(dimension: usize) -> Self {
        assert!(dimension > 0, "landscape dimension must be positive");
        Self { dimension }
    }
}

impl Landscape for PopcountLandscape {
    fn dimension(&self) -> usize {
        self.dimension
    }

    fn fitness(&self, s: &BitString) -> f64 {
        assert_eq!(
            s.len(),
            self.dimension,
            "solution does not match landscape dimension"
        );
        s.count_ones() as f64
    }

    fn cursor(&self, start: BitString) -> Box<dyn NeighborhoodCursor + '_> {
        Box::new(FullScanCursor::new(self, start))
    }
}
