//! Text file formats for codes and generator sets.
//!
//! All three formats are line-oriented UTF-8 with `#` comments and blank
//! lines ignored:
//!
//! ```text
//! %SC1                     %RM1                  %GL1
//! field <p> <m>            field <p> <m>         field <p> <m>
//! [poly <c_0> ...]         [poly <c_0> ...]      [poly <c_0> ...]
//! ambient <n>              shape <k> <m>         ambient <n>
//! word <k>                 mat                   gen [frob <j>]
//! <k rows of n indices>    <k rows of m indices> <n rows of n indices>
//! ```
//!
//! The `poly` line carries the field modulus (constant term first) and is
//! present exactly when m > 1. Element entries are integer indices below
//! the field order. Serializers emit canonical sorted words with fixed
//! whitespace, so output is byte-deterministic; loaders canonicalize rows
//! to RREF and reject duplicate codewords.

use std::fmt::Write as _;

use subcode::{
    FieldRef, FieldSpec, MatrixGF, Provenance, RankMetricCode, SemilinearMap, Subspace,
    SubspaceCode,
};
use thiserror::Error;

pub const SC_MAGIC: &str = "%SC1";
pub const RM_MAGIC: &str = "%RM1";
pub const GL_MAGIC: &str = "%GL1";

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: expected magic {expected}, found '{found}'")]
    BadMagic {
        line: usize,
        expected: &'static str,
        found: String,
    },
    #[error("line {line}: expected '{expected}', found '{found}'")]
    Expected {
        line: usize,
        expected: &'static str,
        found: String,
    },
    #[error("line {line}: cannot parse '{token}' as an integer")]
    BadNumber { line: usize, token: String },
    #[error("line {line}: expected {expected} entries, found {found}")]
    WrongWidth {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("word at line {line}: {declared} rows declared, {found} present")]
    RowCount {
        line: usize,
        declared: usize,
        found: usize,
    },
    #[error("line {line}: duplicate codeword after canonicalization")]
    DuplicateWord { line: usize },
    #[error("unexpected end of file")]
    UnexpectedEof,
    #[error(transparent)]
    Core(#[from] subcode::Error),
}

type FResult<T> = Result<T, FormatError>;

/// Content lines with their 1-based numbers; comments and blanks removed.
struct Lines<'a> {
    items: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Lines<'a> {
        let items = text
            .lines()
            .enumerate()
            .filter_map(|(i, raw)| {
                let content = raw.split('#').next().unwrap_or("").trim();
                (!content.is_empty()).then_some((i + 1, content))
            })
            .collect();
        Lines { items, pos: 0 }
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.items.get(self.pos).copied()
    }

    fn next(&mut self) -> FResult<(usize, &'a str)> {
        let item = self
            .items
            .get(self.pos)
            .copied()
            .ok_or(FormatError::UnexpectedEof)?;
        self.pos += 1;
        Ok(item)
    }
}

fn parse_num<T: std::str::FromStr>(line: usize, token: &str) -> FResult<T> {
    token.parse().map_err(|_| FormatError::BadNumber {
        line,
        token: token.to_string(),
    })
}

fn parse_row(line: usize, text: &str, width: usize) -> FResult<Vec<u32>> {
    let entries: Vec<&str> = text.split_whitespace().collect();
    if entries.len() != width {
        return Err(FormatError::WrongWidth {
            line,
            expected: width,
            found: entries.len(),
        });
    }
    entries.iter().map(|t| parse_num(line, t)).collect()
}

fn expect_magic(lines: &mut Lines, magic: &'static str) -> FResult<()> {
    let (line, content) = lines.next()?;
    if content != magic {
        return Err(FormatError::BadMagic {
            line,
            expected: magic,
            found: content.to_string(),
        });
    }
    Ok(())
}

/// `field <p> <m>` plus the `poly` modulus line required when m > 1.
fn parse_field(lines: &mut Lines) -> FResult<FieldRef> {
    let (line, content) = lines.next()?;
    let tokens: Vec<&str> = content.split_whitespace().collect();
    if tokens.len() != 3 || tokens[0] != "field" {
        return Err(FormatError::Expected {
            line,
            expected: "field <p> <m>",
            found: content.to_string(),
        });
    }
    let p: u32 = parse_num(line, tokens[1])?;
    let m: u32 = parse_num(line, tokens[2])?;
    let modulus: Option<Vec<u16>> = if m > 1 {
        let (pline, pcontent) = lines.next()?;
        let ptokens: Vec<&str> = pcontent.split_whitespace().collect();
        if ptokens.first() != Some(&"poly") {
            return Err(FormatError::Expected {
                line: pline,
                expected: "poly <c_0> ... <c_{m-1}>",
                found: pcontent.to_string(),
            });
        }
        Some(
            ptokens[1..]
                .iter()
                .map(|t| parse_num(pline, t))
                .collect::<FResult<Vec<u16>>>()?,
        )
    } else {
        None
    };
    Ok(FieldSpec::make(p, m, modulus.as_deref())?)
}

fn write_field(out: &mut String, spec: &FieldRef) {
    let _ = writeln!(out, "field {} {}", spec.characteristic(), spec.degree());
    if spec.degree() > 1 {
        let coeffs: Vec<String> = spec.modulus().iter().map(u16::to_string).collect();
        let _ = writeln!(out, "poly {}", coeffs.join(" "));
    }
}

fn write_matrix_rows(out: &mut String, m: &MatrixGF) {
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|e| e.index().to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
}

// ---------------------------------------------------------------------------
// Subspace code files (.sc)

pub fn parse_code(text: &str) -> FResult<SubspaceCode> {
    let mut lines = Lines::new(text);
    expect_magic(&mut lines, SC_MAGIC)?;
    let spec = parse_field(&mut lines)?;

    let (line, content) = lines.next()?;
    let tokens: Vec<&str> = content.split_whitespace().collect();
    if tokens.len() != 2 || tokens[0] != "ambient" {
        return Err(FormatError::Expected {
            line,
            expected: "ambient <n>",
            found: content.to_string(),
        });
    }
    let ambient: usize = parse_num(line, tokens[1])?;

    let mut words: Vec<Subspace> = Vec::new();
    while let Some((line, content)) = lines.peek() {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != 2 || tokens[0] != "word" {
            return Err(FormatError::Expected {
                line,
                expected: "word <k>",
                found: content.to_string(),
            });
        }
        lines.next()?;
        let declared: usize = parse_num(line, tokens[1])?;
        let mut rows = Vec::with_capacity(declared);
        for i in 0..declared {
            let (rline, rcontent) = lines.next().map_err(|_| FormatError::RowCount {
                line,
                declared,
                found: i,
            })?;
            if rcontent.starts_with("word") {
                return Err(FormatError::RowCount {
                    line,
                    declared,
                    found: i,
                });
            }
            rows.push(parse_row(rline, rcontent, ambient)?);
        }
        // `word 0` (the zero subspace) has no rows; the matrix still needs
        // the declared ambient width.
        let basis = if rows.is_empty() {
            MatrixGF::zeros(&spec, 0, ambient)
        } else {
            MatrixGF::from_rows(&spec, &rows)?
        };
        let word = Subspace::from_rows(basis);
        if words.contains(&word) {
            return Err(FormatError::DuplicateWord { line });
        }
        words.push(word);
    }
    Ok(SubspaceCode::from_words(
        &spec,
        ambient,
        words,
        Provenance::Adhoc,
    )?)
}

pub fn serialize_code(code: &SubspaceCode) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{SC_MAGIC}");
    write_field(&mut out, code.spec());
    let _ = writeln!(out, "ambient {}", code.ambient());
    for word in code.words() {
        let _ = writeln!(out, "word {}", word.dim());
        write_matrix_rows(&mut out, word.basis());
    }
    out
}

// ---------------------------------------------------------------------------
// Rank-metric code files (.rm)

pub fn parse_rank_code(text: &str) -> FResult<RankMetricCode> {
    let mut lines = Lines::new(text);
    expect_magic(&mut lines, RM_MAGIC)?;
    let spec = parse_field(&mut lines)?;

    let (line, content) = lines.next()?;
    let tokens: Vec<&str> = content.split_whitespace().collect();
    if tokens.len() != 3 || tokens[0] != "shape" {
        return Err(FormatError::Expected {
            line,
            expected: "shape <k> <m>",
            found: content.to_string(),
        });
    }
    let k: usize = parse_num(line, tokens[1])?;
    let m: usize = parse_num(line, tokens[2])?;

    let mut words = Vec::new();
    while let Some((line, content)) = lines.peek() {
        if content != "mat" {
            return Err(FormatError::Expected {
                line,
                expected: "mat",
                found: content.to_string(),
            });
        }
        lines.next()?;
        let mut rows = Vec::with_capacity(k);
        for i in 0..k {
            let (rline, rcontent) = lines.next().map_err(|_| FormatError::RowCount {
                line,
                declared: k,
                found: i,
            })?;
            if rcontent == "mat" {
                return Err(FormatError::RowCount {
                    line,
                    declared: k,
                    found: i,
                });
            }
            rows.push(parse_row(rline, rcontent, m)?);
        }
        let word = MatrixGF::from_rows(&spec, &rows)?;
        if words.contains(&word) {
            return Err(FormatError::DuplicateWord { line });
        }
        words.push(word);
    }
    Ok(RankMetricCode::from_words(&spec, k, m, words)?)
}

pub fn serialize_rank_code(code: &RankMetricCode) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{RM_MAGIC}");
    write_field(&mut out, code.spec());
    let (k, m) = code.shape();
    let _ = writeln!(out, "shape {k} {m}");
    for word in code.words() {
        let _ = writeln!(out, "mat");
        write_matrix_rows(&mut out, word);
    }
    out
}

// ---------------------------------------------------------------------------
// Generator set files (.gl)

/// A parsed generator file: the ambient dimension, the field, and the
/// generators in file order (order is provenance, not set data).
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    pub spec: FieldRef,
    pub ambient: usize,
    pub generators: Vec<SemilinearMap>,
}

pub fn parse_generators(text: &str) -> FResult<GeneratorSet> {
    let mut lines = Lines::new(text);
    expect_magic(&mut lines, GL_MAGIC)?;
    let spec = parse_field(&mut lines)?;

    let (line, content) = lines.next()?;
    let tokens: Vec<&str> = content.split_whitespace().collect();
    if tokens.len() != 2 || tokens[0] != "ambient" {
        return Err(FormatError::Expected {
            line,
            expected: "ambient <n>",
            found: content.to_string(),
        });
    }
    let ambient: usize = parse_num(line, tokens[1])?;

    let mut generators = Vec::new();
    while let Some((line, content)) = lines.peek() {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let frob: u32 = match tokens.as_slice() {
            ["gen"] => 0,
            ["gen", "frob", j] => parse_num(line, j)?,
            _ => {
                return Err(FormatError::Expected {
                    line,
                    expected: "gen [frob <j>]",
                    found: content.to_string(),
                })
            }
        };
        lines.next()?;
        let mut rows = Vec::with_capacity(ambient);
        for i in 0..ambient {
            let (rline, rcontent) = lines.next().map_err(|_| FormatError::RowCount {
                line,
                declared: ambient,
                found: i,
            })?;
            if rcontent.starts_with("gen") {
                return Err(FormatError::RowCount {
                    line,
                    declared: ambient,
                    found: i,
                });
            }
            rows.push(parse_row(rline, rcontent, ambient)?);
        }
        generators.push(SemilinearMap::new(
            MatrixGF::from_rows(&spec, &rows)?,
            frob,
        )?);
    }
    Ok(GeneratorSet {
        spec,
        ambient,
        generators,
    })
}

pub fn serialize_generators(set: &GeneratorSet) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{GL_MAGIC}");
    write_field(&mut out, &set.spec);
    let _ = writeln!(out, "ambient {}", set.ambient);
    for g in &set.generators {
        if g.frobenius().is_identity() {
            let _ = writeln!(out, "gen");
        } else {
            let _ = writeln!(out, "gen frob {}", g.frobenius().exponent());
        }
        write_matrix_rows(&mut out, g.matrix());
    }
    out
}
