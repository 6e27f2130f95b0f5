//! DIMACS CNF reading and writing.
//!
//! The reader accepts the usual liberties: `c` comment lines, blank lines,
//! clauses split across lines or sharing one line. A line starting with `%`
//! ends the input, as in the SATLIB benchmark files. Errors carry 1-based
//! line numbers.

use std::io::{self, BufRead, Write};
use std::mem;

use crate::{CnfFormula, Literal};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DimacsError {
    #[error("line {line}: expected 'p cnf <vars> <clauses>', found {found:?}")]
    BadHeader { line: usize, found: String },
    #[error("no 'p cnf' header found")]
    MissingHeader,
    #[error("line {line}: {token:?} is not a literal")]
    BadToken { line: usize, token: String },
    #[error("line {line}: empty clause")]
    EmptyClause { line: usize },
    #[error("line {line}: variable {var} exceeds the declared {num_vars} variables")]
    VariableOutOfRange {
        line: usize,
        var: u64,
        num_vars: usize,
    },
    #[error("line {line}: variable {var} repeated within a clause")]
    RepeatedVariable { line: usize, var: u64 },
    #[error("line {line}: clause not terminated by 0")]
    UnterminatedClause { line: usize },
    #[error("line {line}: more clauses than the {declared} declared in the header")]
    TooManyClauses { line: usize, declared: usize },
    #[error("line {line}: header declares {declared} clauses but input ends after {found}")]
    TooFewClauses {
        line: usize,
        declared: usize,
        found: usize,
    },
    #[error("read failed: {0}")]
    Io(String),
}

impl From<io::Error> for DimacsError {
    fn from(e: io::Error) -> Self {
        DimacsError::Io(e.to_string())
    }
}

pub fn read_dimacs<R: BufRead>(reader: R) -> Result<CnfFormula, DimacsError> {
    let mut num_vars = 0usize;
    let mut declared = 0usize;
    let mut saw_header = false;
    let mut clauses: Vec<Vec<Literal>> = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    // seen[v] holds the ordinal of the clause that last used variable v.
    let mut seen: Vec<usize> = Vec::new();
    let mut ordinal = 0usize;
    let mut last_line = 0usize;

    for (index, line) in reader.lines().enumerate() {
        let line_no = index + 1;
        last_line = line_no;
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('c') {
            continue;
        }
        if text.starts_with('%') {
            break;
        }

        if !saw_header {
            let bad = || DimacsError::BadHeader {
                line: line_no,
                found: text.to_string(),
            };
            let fields: Vec<&str> = text.split_whitespace().collect();
            if fields.len() != 4 || fields[0] != "p" || fields[1] != "cnf" {
                return Err(bad());
            }
            num_vars = fields[2].parse().map_err(|_| bad())?;
            declared = fields[3].parse().map_err(|_| bad())?;
            if num_vars == 0 || num_vars > i32::MAX as usize {
                return Err(bad());
            }
            seen = vec![usize::MAX; num_vars + 1];
            saw_header = true;
            continue;
        }

        for token in text.split_whitespace() {
            let code: i64 = token.parse().map_err(|_| DimacsError::BadToken {
                line: line_no,
                token: token.to_string(),
            })?;
            if code == 0 {
                if current.is_empty() {
                    return Err(DimacsError::EmptyClause { line: line_no });
                }
                clauses.push(mem::take(&mut current));
                ordinal += 1;
                continue;
            }
            if current.is_empty() && clauses.len() == declared {
                return Err(DimacsError::TooManyClauses {
                    line: line_no,
                    declared,
                });
            }
            let var = code.unsigned_abs();
            if var > num_vars as u64 {
                return Err(DimacsError::VariableOutOfRange {
                    line: line_no,
                    var,
                    num_vars,
                });
            }
            if seen[var as usize] == ordinal {
                return Err(DimacsError::RepeatedVariable { line: line_no, var });
            }
            seen[var as usize] = ordinal;
            current.push(Literal::new(code as i32));
        }
    }

    if !saw_header {
        return Err(DimacsError::MissingHeader);
    }
    if !current.is_empty() {
        return Err(DimacsError::UnterminatedClause { line: last_line });
    }
    if clauses.len() < declared {
        return Err(DimacsError::TooFewClauses {
            line: last_line,
            declared,
            found: clauses.len(),
        });
    }

    Ok(CnfFormula::new(num_vars, clauses).expect("clauses validated during parse"))
}

pub fn write_dimacs<W: Write>(mut writer: W, formula: &CnfFormula) -> io::Result<()> {
    writeln!(
        writer,
        "p cnf {} {}",
        formula.num_vars(),
        formula.num_clauses()
    )?;
    for clause in formula.clauses() {
        for literal in clause {
            write!(writer, "{} ", literal.code())?;
        }
        writeln!(writer, "0")?;
    }
    Ok(())
}
