//! Named group families and the generator text format.
//!
//! String keys address the built-in families:
//!
//! * `cyclic:n` — the n-cycle on n points,
//! * `dihedral:n` — rotation plus reflection of an n-gon on its vertices,
//! * `symmetric:n` — the natural action of S_n,
//! * `regular:<family>` — the regular action of the named family, built as
//!   the coset action on the trivial subgroup.
//!
//! The generator file format is: degree on the first non-blank line, then one
//! generator per line in image notation `[i0,i1,...]`.

use thiserror::Error;

use crate::group::{FiniteGroup, GroupError};
use crate::perm::Permutation;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("unknown group family key `{key}`")]
    UnknownFamily { key: String },
    #[error("bad parameter in family key `{key}`: {reason}")]
    BadParameter { key: String, reason: String },
    #[error("generator file line {line}: {reason}")]
    BadGeneratorFile { line: usize, reason: String },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Resolves a named family key to an enumerated group.
pub fn group_from_spec(key: &str) -> Result<FiniteGroup, FamilyError> {
    let (family, rest) = key
        .split_once(':')
        .ok_or_else(|| FamilyError::UnknownFamily { key: key.to_string() })?;
    match family {
        "cyclic" => {
            let n = parse_count(key, rest, 1)?;
            let r = full_cycle(n);
            Ok(FiniteGroup::from_generators(n, vec![r])?)
        }
        "dihedral" => {
            let n = parse_count(key, rest, 3)?;
            let r = full_cycle(n);
            let s = Permutation::from_images((0..n).map(|i| (n - i) % n).collect())
                .expect("reflection is a bijection");
            Ok(FiniteGroup::from_generators(n, vec![r, s])?)
        }
        "symmetric" => {
            let n = parse_count(key, rest, 1)?;
            let mut gens = Vec::new();
            if n >= 2 {
                gens.push(Permutation::from_cycles(n, &[vec![0, 1]]).expect("transposition"));
            }
            if n >= 3 {
                gens.push(full_cycle(n));
            }
            Ok(FiniteGroup::from_generators(n, gens)?)
        }
        "regular" => {
            let base = group_from_spec(rest)?;
            Ok(base.coset_action(&base.trivial_subgroup())?)
        }
        _ => Err(FamilyError::UnknownFamily { key: key.to_string() }),
    }
}

/// Parses the generator text format: degree line, then image arrays.
pub fn parse_group_text(text: &str) -> Result<FiniteGroup, FamilyError> {
    let mut degree: Option<usize> = None;
    let mut generators = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        match degree {
            None => {
                degree = Some(line.parse().map_err(|_| FamilyError::BadGeneratorFile {
                    line: idx + 1,
                    reason: format!("expected a degree, found `{line}`"),
                })?);
            }
            Some(_) => {
                let images: Vec<usize> =
                    serde_json::from_str(line).map_err(|e| FamilyError::BadGeneratorFile {
                        line: idx + 1,
                        reason: format!("expected `[i0,i1,...]`: {e}"),
                    })?;
                generators.push(Permutation::from_images(images)?);
            }
        }
    }
    let degree = degree.ok_or_else(|| FamilyError::BadGeneratorFile {
        line: 0,
        reason: "empty input".to_string(),
    })?;
    Ok(FiniteGroup::from_generators(degree, generators)?)
}

fn full_cycle(n: usize) -> Permutation {
    Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).expect("cycle is a bijection")
}

fn parse_count(key: &str, rest: &str, min: usize) -> Result<usize, FamilyError> {
    let n: usize = rest.parse().map_err(|_| FamilyError::BadParameter {
        key: key.to_string(),
        reason: format!("`{rest}` is not a count"),
    })?;
    if n < min {
        return Err(FamilyError::BadParameter {
            key: key.to_string(),
            reason: format!("needs at least {min} points"),
        });
    }
    Ok(n)
}
