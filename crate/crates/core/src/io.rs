//! Text formats for groups.
//!
//! * Cayley table: first line `n`, then `n` lines of `n` space-separated
//!   0-based indices.
//! * Permutation generators: one generator per line in disjoint-cycle
//!   notation, e.g. `(0 1)(2 3 4)`, on 0-based points.
//! * Z-group parameters: a single `m:n:r` line.
//!
//! Blank lines and lines starting with `#` are ignored in every format.

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use thiserror::Error;

use crate::kernel::{FiniteGroup, GroupConfig, KernelError, Permutation};
use crate::zgen::{realize, ZParams, ZgenError};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Zgen(#[from] ZgenError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupFormat {
    Table,
    Permutations,
    ZParams,
}

impl FromStr for GroupFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "table" | "cayley" => Ok(Self::Table),
            "perm" | "perms" | "permutations" => Ok(Self::Permutations),
            "zparams" | "z" | "mnr" => Ok(Self::ZParams),
            _ => Err(format!("unknown group format {s:?} (table, perm, zparams)")),
        }
    }
}

impl fmt::Display for GroupFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Table => "table",
            Self::Permutations => "perm",
            Self::ZParams => "zparams",
        })
    }
}

impl GroupFormat {
    /// By extension (`.tbl`/`.cayley`, `.perm`/`.perms`, `.zp`/`.zparams`),
    /// otherwise by content: `(` means cycles, `:` means `m:n:r`.
    pub fn detect(path: &Path, text: &str) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some("tbl" | "cayley" | "table") => return Self::Table,
            Some("perm" | "perms") => return Self::Permutations,
            Some("zp" | "zparams") => return Self::ZParams,
            _ => {}
        }
        if text.contains('(') {
            Self::Permutations
        } else if text.contains(':') {
            Self::ZParams
        } else {
            Self::Table
        }
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_cayley_text(text: &str, name: &str, config: &GroupConfig) -> Result<FiniteGroup, InputError> {
    let mut lines = content_lines(text);
    let (first, header) = lines.next().ok_or(InputError::Parse { line: 1, msg: "empty input".into() })?;
    let n: usize = header
        .parse()
        .map_err(|_| InputError::Parse { line: first, msg: format!("expected the order, got {header:?}") })?;
    let mut rows = Vec::with_capacity(n);
    for (line, l) in lines {
        let row = l
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| InputError::Parse { line, msg: format!("bad table row {l:?}") })?;
        if row.len() != n {
            return Err(InputError::Parse { line, msg: format!("expected {n} entries, got {}", row.len()) });
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(InputError::Parse {
            line: text.lines().count(),
            msg: format!("expected {n} rows, got {}", rows.len()),
        });
    }
    Ok(FiniteGroup::from_cayley_table_with(&rows, name, config)?)
}

pub fn parse_permutation_text(
    text: &str,
    name: &str,
    config: &GroupConfig,
) -> Result<FiniteGroup, InputError> {
    let mut cycle_lists = Vec::new();
    for (line, l) in content_lines(text) {
        let cycles = Permutation::parse_cycles(l)
            .map_err(|e| InputError::Parse { line, msg: e.to_string() })?;
        cycle_lists.push((line, cycles));
    }
    let degree = cycle_lists
        .iter()
        .flat_map(|(_, cs)| cs.iter().flatten())
        .max()
        .map_or(1, |&p| p + 1);
    let gens = cycle_lists
        .iter()
        .map(|(line, cs)| {
            Permutation::from_cycles(cs, degree)
                .map_err(|e| InputError::Parse { line: *line, msg: e.to_string() })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FiniteGroup::from_permutation_generators_with(&gens, name, config)?)
}

pub fn parse_zparams_text(text: &str) -> Result<ZParams, InputError> {
    let mut lines = content_lines(text);
    let (line, l) = lines.next().ok_or(InputError::Parse { line: 1, msg: "empty input".into() })?;
    if let Some((extra, _)) = lines.next() {
        return Err(InputError::Parse { line: extra, msg: "expected a single m:n:r line".into() });
    }
    l.parse().map_err(|e: ZgenError| InputError::Parse { line, msg: e.to_string() })
}

/// Parses group text in the given format. Z-group parameters are validated
/// and realized.
pub fn parse_group_text(
    text: &str,
    format: GroupFormat,
    name: &str,
    config: &GroupConfig,
) -> Result<FiniteGroup, InputError> {
    match format {
        GroupFormat::Table => parse_cayley_text(text, name, config),
        GroupFormat::Permutations => parse_permutation_text(text, name, config),
        GroupFormat::ZParams => Ok(realize(parse_zparams_text(text)?)?),
    }
}

/// Reads a group file; the format comes from `format` or [`GroupFormat::detect`].
pub fn parse_group_file(
    path: impl AsRef<Path>,
    format: Option<GroupFormat>,
    config: &GroupConfig,
) -> Result<(FiniteGroup, GroupFormat), InputError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)
        .map_err(|source| InputError::Io { path: path.display().to_string(), source })?;
    let format = format.unwrap_or_else(|| GroupFormat::detect(path, &text));
    let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("group");
    Ok((parse_group_text(&text, format, name, config)?, format))
}

/// The Cayley-table text format for `g`.
pub fn format_cayley_table(g: &FiniteGroup) -> String {
    let mut out = format!("{}\n", g.order());
    for row in g.cayley_rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::dicyclic;

    fn cfg() -> GroupConfig {
        GroupConfig::default()
    }

    #[test]
    fn cayley_text() {
        let g = parse_cayley_text("2\n0 1\n1 0", "C2", &cfg()).unwrap();
        assert_eq!(g.order(), 2);
        let q8 = dicyclic(2).unwrap();
        let back = parse_cayley_text(&format_cayley_table(&q8), "Q8", &cfg()).unwrap();
        assert_eq!(back.cayley_rows(), q8.cayley_rows());
    }

    #[test]
    fn cayley_errors_carry_lines() {
        let err = parse_cayley_text("2\n0 1\n1 x", "bad", &cfg()).unwrap_err();
        assert!(matches!(err, InputError::Parse { line: 3, .. }), "{err}");
        let err = parse_cayley_text("3\n0 1 2\n1 2 0", "bad", &cfg()).unwrap_err();
        assert!(matches!(err, InputError::Parse { .. }));
        let err = parse_cayley_text("2\n0 1\n1 1", "bad", &cfg()).unwrap_err();
        assert!(matches!(err, InputError::Kernel(KernelError::NotLatinSquare(_))));
        assert!(parse_cayley_text("", "bad", &cfg()).is_err());
    }

    #[test]
    fn permutation_text() {
        let g = parse_permutation_text("(0 1)\n(0 1 2)", "S3", &cfg()).unwrap();
        assert_eq!(g.order(), 6);
        let g = parse_permutation_text("# F20\n(0 1 2 3 4)\n(1 2 4 3)\n", "F20", &cfg()).unwrap();
        assert_eq!(g.order(), 20);
        let err = parse_permutation_text("(0 1)\n(0 1", "bad", &cfg()).unwrap_err();
        assert!(matches!(err, InputError::Parse { line: 2, .. }));
    }

    #[test]
    fn zparams_text() {
        assert_eq!(parse_zparams_text("15:4:2\n").unwrap(), ZParams::new(15, 4, 2));
        assert!(matches!(parse_zparams_text("15:4"), Err(InputError::Parse { line: 1, .. })));
        assert!(parse_zparams_text("15:4:2\n7:3:2").is_err());
        let g = parse_group_text("15:4:2", GroupFormat::ZParams, "x", &cfg()).unwrap();
        assert_eq!(g.order(), 60);
        assert!(matches!(
            parse_group_text("7:3:3", GroupFormat::ZParams, "x", &cfg()),
            Err(InputError::Zgen(ZgenError::InvalidParams { .. }))
        ));
    }

    #[test]
    fn detection() {
        assert_eq!(GroupFormat::detect(Path::new("a.perm"), "2\n"), GroupFormat::Permutations);
        assert_eq!(GroupFormat::detect(Path::new("a.txt"), "(0 1)"), GroupFormat::Permutations);
        assert_eq!(GroupFormat::detect(Path::new("a"), "15:4:2"), GroupFormat::ZParams);
        assert_eq!(GroupFormat::detect(Path::new("a"), "2\n0 1\n1 0"), GroupFormat::Table);
        assert_eq!("perm".parse::<GroupFormat>(), Ok(GroupFormat::Permutations));
        assert!("xml".parse::<GroupFormat>().is_err());
    }

    #[test]
    fn files() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("z60.zp");
        fs::write(&p, "15:4:2\n").unwrap();
        let (g, f) = parse_group_file(&p, None, &cfg()).unwrap();
        assert_eq!((g.order(), f), (60, GroupFormat::ZParams));
        assert!(matches!(
            parse_group_file(dir.path().join("nope"), None, &cfg()),
            Err(InputError::Io { .. })
        ));
    }
}
