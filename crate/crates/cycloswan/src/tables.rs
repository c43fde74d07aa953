//! Bundled reference tables: known-good inert primes and Swan subgroup
//! orders. Shipped as JSON resources so the `verify` command and the test
//! suite share one source of truth.

use std::sync::OnceLock;

use num_bigint::BigUint;
use serde::Deserialize;

use crate::bigarith::Natural;

/// Row of the progression-method table: least primitive root r and the least
/// prime > 2 congruent to it mod m.
#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
pub struct ProgressionRow {
    pub m: u64,
    pub r: u64,
    pub p: u64,
}

/// Row of the direct table: the true least inert prime > 2 for m.
#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
pub struct DirectRow {
    pub m: u64,
    pub p: u64,
}

/// Row of the Swan-order table: the cokernel order (exact when the
/// cyclotomic units are known to be the full unit group, otherwise an upper
/// bound).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwanRow {
    pub m: u64,
    pub p: u64,
    pub value: Natural,
    pub exact: bool,
}

#[derive(Deserialize)]
struct RawSwanRow {
    m: u64,
    p: u64,
    value: String,
    exact: bool,
}

#[derive(Clone, Debug)]
pub struct ReferenceTables {
    pub progression: Vec<ProgressionRow>,
    pub direct: Vec<DirectRow>,
    pub swan: Vec<SwanRow>,
}

const PROGRESSION_JSON: &str = include_str!("../data/inert_progression.json");
const DIRECT_JSON: &str = include_str!("../data/inert_direct.json");
const SWAN_JSON: &str = include_str!("../data/swan_orders.json");

/// The bundled tables, parsed once.
pub fn reference_tables() -> &'static ReferenceTables {
    static TABLES: OnceLock<ReferenceTables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let progression: Vec<ProgressionRow> =
            serde_json::from_str(PROGRESSION_JSON).expect("bundled progression table parses");
        let direct: Vec<DirectRow> =
            serde_json::from_str(DIRECT_JSON).expect("bundled direct table parses");
        let raw: Vec<RawSwanRow> =
            serde_json::from_str(SWAN_JSON).expect("bundled swan table parses");
        let swan = raw
            .into_iter()
            .map(|r| SwanRow {
                m: r.m,
                p: r.p,
                value: r
                    .value
                    .parse::<BigUint>()
                    .expect("bundled swan value is a decimal integer"),
                exact: r.exact,
            })
            .collect();
        ReferenceTables {
            progression,
            direct,
            swan,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_parse_and_have_expected_shapes() {
        let t = reference_tables();
        assert_eq!(t.progression.len(), 48);
        assert_eq!(t.direct.len(), 30);
        assert_eq!(t.swan.len(), 30);
        // sorted by m, no duplicates
        for w in t.progression.windows(2) {
            assert!(w[0].m < w[1].m);
        }
        for w in t.direct.windows(2) {
            assert!(w[0].m < w[1].m);
        }
        // swan rows pair up with the direct table
        for (s, d) in t.swan.iter().zip(&t.direct) {
            assert_eq!((s.m, s.p), (d.m, d.p));
        }
    }

    #[test]
    fn spot_values() {
        let t = reference_tables();
        let row13 = t.progression.iter().find(|r| r.m == 13).unwrap();
        assert_eq!((row13.r, row13.p), (2, 41));
        let row41 = t.progression.iter().find(|r| r.m == 41).unwrap();
        assert_eq!((row41.r, row41.p), (6, 47));
        let row53 = t.progression.iter().find(|r| r.m == 53).unwrap();
        assert_eq!((row53.r, row53.p), (2, 373));

        let swan13 = t.swan.iter().find(|r| r.m == 13).unwrap();
        assert_eq!(swan13.value, Natural::from(13575u32));
        assert!(swan13.exact);
        let swan97 = t.swan.iter().find(|r| r.m == 97).unwrap();
        assert!(!swan97.exact);
        assert_eq!(
            swan97.value.to_string(),
            "439510970573257846930592330460696"
        );
    }
}
