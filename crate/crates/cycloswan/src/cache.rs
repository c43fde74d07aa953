//! Optional on-disk factorization cache.
//!
//! A single JSON file maps decimal integer strings to arrays of
//! `[prime-string, exponent]` pairs. The file is read on startup and rewritten
//! with any new entries on save; corrupt entries are skipped with a warning.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;
use num_traits::One;

use crate::bigarith::{is_prime, Natural};

#[derive(Debug, Default)]
pub struct FactorCache {
    map: BTreeMap<Natural, Vec<(Natural, u32)>>,
    path: Option<PathBuf>,
    dirty: bool,
}

impl FactorCache {
    /// An empty in-memory cache with no backing file.
    pub fn in_memory() -> Self {
        FactorCache::default()
    }

    /// Load a cache file, returning the cache plus warnings for every entry
    /// that failed validation. A missing file yields an empty cache.
    pub fn load(path: &Path) -> (Self, Vec<String>) {
        let mut warnings = Vec::new();
        let mut map = BTreeMap::new();
        match std::fs::read_to_string(path) {
            Ok(text) => match serde_json::from_str::<BTreeMap<String, Vec<(String, u32)>>>(&text) {
                Ok(raw) => {
                    for (key, pairs) in raw {
                        match parse_entry(&key, &pairs) {
                            Ok((n, parsed)) => {
                                map.insert(n, parsed);
                            }
                            Err(why) => {
                                warnings.push(format!("cache entry {key:?} ignored: {why}"));
                            }
                        }
                    }
                }
                Err(e) => warnings.push(format!("cache file {} ignored: {e}", path.display())),
            },
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(e) => warnings.push(format!("cache file {} unreadable: {e}", path.display())),
        }
        (
            FactorCache {
                map,
                path: Some(path.to_path_buf()),
                dirty: false,
            },
            warnings,
        )
    }

    pub fn get(&self, n: &Natural) -> Option<&[(Natural, u32)]> {
        self.map.get(n).map(|v| v.as_slice())
    }

    pub fn insert(&mut self, n: Natural, pairs: &[(Natural, u32)]) {
        if self.map.insert(n, pairs.to_vec()).is_none() {
            self.dirty = true;
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Rewrite the backing file if there is one and new entries were added.
    pub fn save(&mut self) -> std::io::Result<()> {
        let Some(path) = &self.path else {
            return Ok(());
        };
        if !self.dirty {
            return Ok(());
        }
        let raw: BTreeMap<String, Vec<(String, u32)>> = self
            .map
            .iter()
            .map(|(n, pairs)| {
                (
                    n.to_string(),
                    pairs.iter().map(|(p, e)| (p.to_string(), *e)).collect(),
                )
            })
            .collect();
        let text = serde_json::to_string_pretty(&raw).expect("cache serialization");
        std::fs::write(path, text)?;
        self.dirty = false;
        Ok(())
    }
}

fn parse_entry(key: &str, pairs: &[(String, u32)]) -> Result<(Natural, Vec<(Natural, u32)>), String> {
    let n = key
        .parse::<BigUint>()
        .map_err(|_| "key is not a decimal integer".to_string())?;
    let mut parsed = Vec::with_capacity(pairs.len());
    let mut product = Natural::one();
    for (p, e) in pairs {
        let p = p
            .parse::<BigUint>()
            .map_err(|_| format!("factor {p:?} is not a decimal integer"))?;
        if *e == 0 {
            return Err(format!("factor {p} has exponent 0"));
        }
        if !is_prime(&p) {
            return Err(format!("factor {p} is not prime"));
        }
        product *= p.pow(*e);
        parsed.push((p, *e));
    }
    if product != n {
        return Err("product of factors does not equal the key".to_string());
    }
    parsed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok((n, parsed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_validation() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("factors.json");
        std::fs::write(
            &path,
            r#"{
                "24": [["2", 3], ["3", 1]],
                "25": [["5", 1]],
                "not-a-number": [["2", 1]],
                "21": [["3", 1], ["9", 1]]
            }"#,
        )
        .unwrap();
        let (mut cache, warnings) = FactorCache::load(&path);
        assert_eq!(cache.len(), 1, "only the valid entry survives");
        assert_eq!(warnings.len(), 3);
        assert!(cache.get(&Natural::from(24u32)).is_some());

        cache.insert(
            Natural::from(35u32),
            &[(Natural::from(5u32), 1), (Natural::from(7u32), 1)],
        );
        cache.save().unwrap();

        let (reloaded, warnings) = FactorCache::load(&path);
        assert!(warnings.is_empty());
        assert_eq!(reloaded.len(), 2);
        assert_eq!(
            reloaded.get(&Natural::from(35u32)).unwrap(),
            &[(Natural::from(5u32), 1), (Natural::from(7u32), 1)]
        );
    }

    #[test]
    fn missing_file_is_empty() {
        let dir = tempfile::tempdir().unwrap();
        let (cache, warnings) = FactorCache::load(&dir.path().join("nope.json"));
        assert!(cache.is_empty());
        assert!(warnings.is_empty());
    }
}
