use std::fmt;

use evoscape_core::BitString;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MaxSatError {
    #[error("formula must have at least one variable")]
    NoVariables,
    #[error("clause {clause} is empty")]
    EmptyClause { clause: usize },
    #[error("clause {clause} uses variable {var} but the formula has {num_vars} variables")]
    VariableOutOfRange {
        clause: usize,
        var: u32,
        num_vars: usize,
    },
    #[error("clause {clause} mentions variable {var} more than once")]
    RepeatedVariable { clause: usize, var: u32 },
    #[error("assignment has {actual} bits but the formula has {expected} variables")]
    AssignmentLength { expected: usize, actual: usize },
    #[error("clauses need at least one literal")]
    ZeroLiteralsPerClause,
    #[error("cannot draw {literals_per_clause} distinct variables out of {num_vars}")]
    ClauseWiderThanFormula {
        literals_per_clause: usize,
        num_vars: usize,
    },
}

/// A literal in DIMACS convention: variable `v` (1-based) appears as the code
/// `v` when positive and `-v` when negated. Variable `v` reads bit `v - 1` of
/// an assignment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Literal(i32);

impl Literal {
    pub fn new(code: i32) -> Self {
        assert!(code != 0, "literal code must be nonzero");
        Self(code)
    }

    pub fn code(self) -> i32 {
        self.0
    }

    /// The 1-based variable number.
    pub fn var(self) -> u32 {
        self.0.unsigned_abs()
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    /// Index of this literal's variable in an assignment bit string.
    pub fn bit_index(self) -> usize {
        self.var() as usize - 1
    }

    pub fn negated(self) -> Self {
        Self(-self.0)
    }

    pub fn satisfied_by(self, assignment: &BitString) -> bool {
        assignment.bit(self.bit_index()) == self.is_positive()
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A CNF formula with a fixed variable count.
///
/// Invariants, enforced at construction: every clause is non-empty, every
/// variable is in `1..=num_vars`, and no clause mentions a variable twice.
/// The last one matters for incremental evaluation, which counts satisfied
/// literals per clause and assumes one flip changes each count by at most
/// one. Clause indices in errors are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<Literal>>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<Literal>>) -> Result<Self, MaxSatError> {
        if num_vars == 0 {
            return Err(MaxSatError::NoVariables);
        }
        let mut seen = vec![usize::MAX; num_vars + 1];
        for (index, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(MaxSatError::EmptyClause { clause: index });
            }
            for literal in clause {
                let var = literal.var();
                if var as usize > num_vars {
                    return Err(MaxSatError::VariableOutOfRange {
                        clause: index,
                        var,
                        num_vars,
                    });
                }
                if seen[var as usize] == index {
                    return Err(MaxSatError::RepeatedVariable { clause: index, var });
                }
                seen[var as usize] = index;
            }
        }
        Ok(Self { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    /// Number of satisfied clauses under `assignment`. This is the fitness
    /// function of the MAX-SAT landscape.
    pub fn evaluate(&self, assignment: &BitString) -> Result<u64, MaxSatError> {
        if assignment.len() != self.num_vars {
            return Err(MaxSatError::AssignmentLength {
                expected: self.num_vars,
                actual: assignment.len(),
            });
        }
        Ok(self
            .clauses
            .iter()
            .filter(|clause| clause.iter().any(|l| l.satisfied_by(assignment)))
            .count() as u64)
    }
}
