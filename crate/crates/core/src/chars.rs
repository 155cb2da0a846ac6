//! Symmetric-group characters by Murnaghan–Nakayama and Littlewood–Richardson
//! coefficients by tableau counting, both memoized.
//!
//! Character tables are computed a whole degree at a time and published into
//! the memo only when complete, so readers never see a partial table. If
//! `SKEINLAB_CACHE` names a directory, tables are also persisted there as
//! JSON and reloaded on later runs; unreadable files are ignored.

use std::collections::{BTreeMap, HashMap};
use std::path::PathBuf;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{enumerate, Partition};

pub const CACHE_ENV: &str = "SKEINLAB_CACHE";
const CACHE_VERSION: u32 = 1;

/// All values `χ_λ(C_μ)` for one degree.
#[derive(Debug)]
pub struct CharTable {
    pub degree: usize,
    pub partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<i64>>,
}

impl CharTable {
    fn from_values(degree: usize, values: Vec<Vec<i64>>) -> Self {
        let partitions = enumerate(degree);
        let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        CharTable {
            degree,
            partitions,
            index,
            values,
        }
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> i64 {
        self.values[self.index[lambda]][self.index[mu]]
    }
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    degree: usize,
    entries: Vec<(Partition, Partition, i64)>,
}

fn tables() -> &'static RwLock<HashMap<usize, Arc<CharTable>>> {
    static T: OnceLock<RwLock<HashMap<usize, Arc<CharTable>>>> = OnceLock::new();
    T.get_or_init(Default::default)
}

fn cache_path(degree: usize) -> Option<PathBuf> {
    let dir = std::env::var_os(CACHE_ENV)?;
    Some(PathBuf::from(dir).join(format!("chars-v{CACHE_VERSION}-n{degree}.json")))
}

fn load_cached(degree: usize) -> Option<CharTable> {
    let text = std::fs::read_to_string(cache_path(degree)?).ok()?;
    let file: CacheFile = serde_json::from_str(&text).ok()?;
    if file.version != CACHE_VERSION || file.degree != degree {
        return None;
    }
    let parts = enumerate(degree);
    let index: HashMap<&Partition, usize> = parts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut values = vec![vec![None; parts.len()]; parts.len()];
    for (l, m, v) in &file.entries {
        let (i, j) = (*index.get(l)?, *index.get(m)?);
        values[i][j] = Some(*v);
    }
    let values = values
        .into_iter()
        .map(|row| row.into_iter().collect::<Option<Vec<i64>>>())
        .collect::<Option<Vec<_>>>()?;
    Some(CharTable::from_values(degree, values))
}

fn store_cached(table: &CharTable) {
    let Some(path) = cache_path(table.degree) else {
        return;
    };
    let mut entries = Vec::new();
    for (i, l) in table.partitions.iter().enumerate() {
        for (j, m) in table.partitions.iter().enumerate() {
            entries.push((l.clone(), m.clone(), table.values[i][j]));
        }
    }
    let file = CacheFile {
        version: CACHE_VERSION,
        degree: table.degree,
        entries,
    };
    let Ok(text) = serde_json::to_string(&file) else {
        return;
    };
    // Write then rename so concurrent readers see old or new, never half.
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    if let Some(dir) = path.parent() {
        let _ = std::fs::create_dir_all(dir);
    }
    if std::fs::write(&tmp, text).is_ok() {
        let _ = std::fs::rename(&tmp, &path);
    }
}

/// The full character table of `S_n`.
pub fn char_table(degree: usize) -> Arc<CharTable> {
    if let Some(t) = tables().read().unwrap().get(&degree) {
        return t.clone();
    }
    let table = match load_cached(degree) {
        Some(t) => t,
        None => {
            let t = compute_table(degree);
            store_cached(&t);
            t
        }
    };
    let table = Arc::new(table);
    tables()
        .write()
        .unwrap()
        .entry(degree)
        .or_insert(table)
        .clone()
}

/// Beta-numbers `λ_i + (l - i)` for `i = 1..l`, decreasing.
fn beta_set(lambda: &Partition) -> Vec<i64> {
    let l = lambda.len() as i64;
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + l - 1 - i as i64)
        .collect()
}

fn from_beta(mut beta: Vec<i64>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let l = beta.len() as i64;
    let parts = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| (b - (l - 1 - i as i64)) as usize)
        .collect();
    Partition::from_unsorted(parts)
}

/// All `(λ minus an r-border strip, sign)` pairs.
fn strip_removals(lambda: &Partition, r: usize) -> Vec<(Partition, i64)> {
    let beta = beta_set(lambda);
    let r = r as i64;
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        let nb = b - r;
        if nb < 0 || beta.contains(&nb) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > nb && x < b).count();
        let mut next = beta.clone();
        next[i] = nb;
        out.push((from_beta(next), if between % 2 == 0 { 1 } else { -1 }));
    }
    out
}

fn compute_table(degree: usize) -> CharTable {
    let parts = enumerate(degree);
    let values = parts
        .iter()
        .map(|lambda| {
            parts
                .iter()
                .map(|mu| {
                    if degree == 0 {
                        return 1;
                    }
                    // Remove the largest part of μ first.
                    let r = mu.parts()[0];
                    let rest = Partition::from_unsorted(mu.parts()[1..].to_vec());
                    let lower = char_table(degree - r);
                    strip_removals(lambda, r)
                        .into_iter()
                        .map(|(l2, s)| s * lower.get(&l2, &rest))
                        .sum()
                })
                .collect()
        })
        .collect();
    CharTable::from_values(degree, values)
}

/// `χ_λ(C_μ)`
pub fn character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.to_string(), mu.to_string()));
    }
    Ok(char_table(lambda.size()).get(lambda, mu))
}

/// `χ_λ(C_μ)` for callers that have already matched sizes.
pub fn chi(lambda: &Partition, mu: &Partition) -> i64 {
    character(lambda, mu).expect("sizes match")
}

type LrKey = (Partition, Partition, Partition);

fn lr_memo() -> &'static RwLock<HashMap<LrKey, u64>> {
    static M: OnceLock<RwLock<HashMap<LrKey, u64>>> = OnceLock::new();
    M.get_or_init(Default::default)
}

/// `c^ν_{λ,μ}` by counting Littlewood–Richardson tableaux of shape `ν/λ`
/// and content `μ`.
pub fn lr_coeff(nu: &Partition, lambda: &Partition, mu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() || !lambda.fits_in(nu) || !mu.fits_in(nu) {
        return 0;
    }
    if mu.is_empty() || lambda.is_empty() {
        return u64::from(if mu.is_empty() { lambda == nu } else { mu == nu });
    }
    let key = (nu.clone(), lambda.clone(), mu.clone());
    if let Some(v) = lr_memo().read().unwrap().get(&key) {
        return *v;
    }
    let v = count_lr_tableaux(nu, lambda, mu);
    lr_memo().write().unwrap().insert(key, v);
    v
}

fn count_lr_tableaux(nu: &Partition, lambda: &Partition, mu: &Partition) -> u64 {
    // Skew cells in reading order: rows top to bottom, each right to left.
    let mut cells = Vec::new();
    for i in 1..=nu.len() {
        for j in (lambda.part(i) + 1..=nu.part(i)).rev() {
            cells.push((i, j));
        }
    }
    let rows = nu.len();
    let width = nu.part(1);
    let mut grid = vec![vec![0usize; width + 2]; rows + 2];
    let mut counts = vec![0usize; mu.len() + 2];
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        lambda: &Partition,
        mu: &Partition,
        grid: &mut Vec<Vec<usize>>,
        counts: &mut Vec<usize>,
    ) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (i, j) = cells[k];
        // Row weakly increasing: bounded by the cell to the right.
        let right = grid[i][j + 1];
        let hi = if right > 0 { right } else { mu.len() };
        // Column strictly increasing: above the cell, if skew.
        let above = if i > 1 && j > lambda.part(i - 1) { grid[i - 1][j] } else { 0 };
        let mut total = 0;
        for v in (above + 1)..=hi {
            if counts[v] >= mu.part(v) {
                continue;
            }
            if v > 1 && counts[v] + 1 > counts[v - 1] {
                continue;
            }
            counts[v] += 1;
            grid[i][j] = v;
            total += go(k + 1, cells, lambda, mu, grid, counts);
            grid[i][j] = 0;
            counts[v] -= 1;
        }
        total
    }
    go(0, &cells, lambda, mu, &mut grid, &mut counts)
}

/// `c^ν_{λ,μ} = Σ_{ρ,τ} χ_λ(ρ) χ_μ(τ) χ_ν(ρ∪τ) / (z_ρ z_τ)`, an independent
/// check on [`lr_coeff`].
pub fn lr_via_chars(nu: &Partition, lambda: &Partition, mu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() {
        return 0;
    }
    let mut acc = BigRational::zero();
    for rho in enumerate(lambda.size()) {
        let a = chi(lambda, &rho);
        if a == 0 {
            continue;
        }
        for tau in enumerate(mu.size()) {
            let b = chi(mu, &tau);
            let c = chi(nu, &rho.union(&tau));
            if b == 0 || c == 0 {
                continue;
            }
            acc += BigRational::new(BigInt::from(a * b * c), rho.z() * tau.z());
        }
    }
    assert!(acc.is_integer(), "character formula gave a non-integer");
    acc.to_integer().to_u64().expect("LR coefficients are nonnegative")
}

/// `s_λ s_μ = Σ_ν c^ν_{λμ} s_ν`
pub fn lr_product(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
    enumerate(lambda.size() + mu.size())
        .into_iter()
        .filter(|nu| lambda.fits_in(nu) && mu.fits_in(nu))
        .filter_map(|nu| {
            let c = lr_coeff(&nu, lambda, mu);
            (c > 0).then_some((nu, c))
        })
        .collect()
}

/// `s_{ν/λ} = Σ_μ c^ν_{λμ} s_μ`
pub fn lr_skew(nu: &Partition, lambda: &Partition) -> BTreeMap<Partition, u64> {
    if !lambda.fits_in(nu) {
        return BTreeMap::new();
    }
    enumerate(nu.size() - lambda.size())
        .into_iter()
        .filter_map(|mu| {
            let c = lr_coeff(nu, lambda, &mu);
            (c > 0).then_some((mu, c))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::p;

    #[test]
    fn small_characters() {
        assert_eq!(character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(character(&p(&[1, 1]), &p(&[2])).unwrap(), -1);
        for mu in enumerate(5) {
            assert_eq!(character(&p(&[5]), &mu).unwrap(), 1);
        }
        assert!(matches!(character(&p(&[2]), &p(&[1])), Err(Error::SizeMismatch(..))));
        // χ_{(2,2)} on a 4-cycle
        assert_eq!(chi(&p(&[2, 2]), &p(&[4])), 0);
        assert_eq!(chi(&p(&[3, 1]), &p(&[2, 2])), -1);
    }

    #[test]
    fn small_lr() {
        assert_eq!(lr_coeff(&p(&[2, 1]), &p(&[2]), &p(&[1])), 1);
        assert_eq!(lr_coeff(&p(&[2, 2]), &p(&[2]), &p(&[2])), 1);
        assert_eq!(lr_coeff(&p(&[4]), &p(&[2]), &p(&[1])), 0);
        assert_eq!(lr_coeff(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
        assert_eq!(lr_via_chars(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
        assert_eq!(lr_via_chars(&p(&[3, 1]), &p(&[2, 1]), &p(&[1])), 1);
        assert_eq!(lr_via_chars(&p(&[3, 1]), &p(&[3, 1]), &Partition::empty()), 1);
    }
}
