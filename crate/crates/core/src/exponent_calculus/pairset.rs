use std::collections::BTreeMap;
use std::io::{Read, Write};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::{rat, CalcError, ExponentPair, Rational};
use crate::exec::Execution;

/// Names accepted by [`named_seed`].
pub const SEED_NAMES: &[&str] = &["trivial", "huxley-32-205", "huxley-89-570"];

/// Built-in seed pairs.
///
/// * `trivial`: `(0, 1)`.
/// * `huxley-32-205`: `(32/205 + ε, 1/2 + 32/205 + ε)`.
/// * `huxley-89-570`: `(89/570 + ε, 374/570 + ε)`.
pub fn named_seed(name: &str) -> Result<ExponentPair, CalcError> {
    let pair = match name {
        "trivial" => ExponentPair::new(rat(0, 1), rat(1, 1))?,
        "huxley-32-205" => ExponentPair::new(rat(32, 205), rat(269, 410))?.with_epsilon(true),
        "huxley-89-570" => ExponentPair::new(rat(89, 570), rat(374, 570))?.with_epsilon(true),
        other => return Err(CalcError::UnknownSeed(other.to_string())),
    };
    Ok(pair)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairEntry {
    pub pair: ExponentPair,
    /// Name of the seed (or other source label) the word is relative to.
    pub seed: String,
}

impl PairEntry {
    /// Ordering used to pick one representative per point: shortest word,
    /// then non-ε before ε, then lexicographic word, then seed label.
    fn preference_key(&self) -> (usize, bool, &str, &str) {
        (
            self.pair.word().len(),
            self.pair.carries_epsilon(),
            self.pair.word(),
            &self.seed,
        )
    }
}

/// A deduplicated set of exponent pairs, sorted by `(k, ℓ)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PairSet {
    seeds: Vec<PairEntry>,
    entries: Vec<PairEntry>,
}

type Point = (Rational, Rational);

fn point_of(p: &ExponentPair) -> Point {
    (p.k().clone(), p.l().clone())
}

fn insert_preferred(map: &mut BTreeMap<Point, PairEntry>, entry: PairEntry) -> bool {
    let key = point_of(&entry.pair);
    match map.get(&key) {
        Some(existing) if existing.preference_key() <= entry.preference_key() => false,
        _ => {
            map.insert(key, entry);
            true
        }
    }
}

impl PairSet {
    /// Seeds become both the named seed list and the initial members.
    pub fn from_seeds<I, S>(seeds: I) -> Self
    where
        I: IntoIterator<Item = (S, ExponentPair)>,
        S: Into<String>,
    {
        let seeds: Vec<PairEntry> = seeds
            .into_iter()
            .map(|(name, pair)| PairEntry {
                pair,
                seed: name.into(),
            })
            .collect();
        let mut set = Self::from_entries(seeds.clone());
        set.seeds = seeds;
        set
    }

    /// Resolve a list of built-in seed names.
    pub fn from_seed_names(names: &[&str]) -> Result<Self, CalcError> {
        let seeds = names
            .iter()
            .map(|n| Ok((n.to_string(), named_seed(n)?)))
            .collect::<Result<Vec<_>, CalcError>>()?;
        Ok(Self::from_seeds(seeds))
    }

    pub fn from_entries(entries: impl IntoIterator<Item = PairEntry>) -> Self {
        let mut map = BTreeMap::new();
        for e in entries {
            insert_preferred(&mut map, e);
        }
        PairSet {
            seeds: Vec::new(),
            entries: map.into_values().collect(),
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = ExponentPair>, label: &str) -> Self {
        Self::from_entries(pairs.into_iter().map(|pair| PairEntry {
            pair,
            seed: label.to_string(),
        }))
    }

    pub fn seeds(&self) -> &[PairEntry] {
        &self.seeds
    }

    pub fn entries(&self) -> &[PairEntry] {
        &self.entries
    }

    pub fn pairs(&self) -> impl Iterator<Item = &ExponentPair> {
        self.entries.iter().map(|e| &e.pair)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains_point(&self, k: &Rational, l: &Rational) -> bool {
        self.entries
            .binary_search_by(|e| (e.pair.k(), e.pair.l()).cmp(&(k, l)))
            .is_ok()
    }

    pub fn records(&self) -> Result<Vec<PairRecord>, CalcError> {
        self.pairs().map(PairRecord::from_pair).collect()
    }

    /// CSV with header `k_num,k_den,l_num,l_den,word,epsilon`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), CalcError> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        for rec in self.records()? {
            w.serialize(rec).map_err(ser_err)?;
        }
        if self.is_empty() {
            w.write_record(PairRecord::HEADER).map_err(ser_err)?;
        }
        w.flush()
            .map_err(|e| CalcError::Serialization(e.to_string()))
    }

    pub fn read_csv<R: Read>(input: R, label: &str) -> Result<Self, CalcError> {
        let mut r = csv::Reader::from_reader(input);
        let headers = r.headers().map_err(ser_err)?.clone();
        if headers.iter().collect::<Vec<_>>() != PairRecord::HEADER {
            return Err(CalcError::Serialization(format!(
                "unexpected CSV header {:?}",
                headers.iter().collect::<Vec<_>>()
            )));
        }
        let pairs = r
            .deserialize::<PairRecord>()
            .map(|rec| rec.map_err(ser_err)?.to_pair())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_pairs(pairs, label))
    }

    /// JSON array of objects with the CSV field names.
    pub fn to_json(&self) -> Result<String, CalcError> {
        serde_json::to_string_pretty(&self.records()?)
            .map_err(|e| CalcError::Serialization(e.to_string()))
    }

    pub fn from_json(text: &str, label: &str) -> Result<Self, CalcError> {
        let records: Vec<PairRecord> =
            serde_json::from_str(text).map_err(|e| CalcError::Serialization(e.to_string()))?;
        let pairs = records
            .into_iter()
            .map(|r| r.to_pair())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_pairs(pairs, label))
    }
}

fn ser_err(e: csv::Error) -> CalcError {
    CalcError::Serialization(e.to_string())
}

/// Flat serialized form of one pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub k_num: i64,
    pub k_den: i64,
    pub l_num: i64,
    pub l_den: i64,
    pub word: String,
    pub epsilon: bool,
}

impl PairRecord {
    pub const HEADER: [&'static str; 6] = ["k_num", "k_den", "l_num", "l_den", "word", "epsilon"];

    pub fn from_pair(p: &ExponentPair) -> Result<Self, CalcError> {
        let fit = |n: &BigInt| n.to_i64().ok_or_else(|| CalcError::Overflow(n.to_string()));
        Ok(PairRecord {
            k_num: fit(p.k().numer())?,
            k_den: fit(p.k().denom())?,
            l_num: fit(p.l().numer())?,
            l_den: fit(p.l().denom())?,
            word: p.word().to_string(),
            epsilon: p.carries_epsilon(),
        })
    }

    pub fn to_pair(&self) -> Result<ExponentPair, CalcError> {
        if self.k_den <= 0 || self.l_den <= 0 {
            return Err(CalcError::Serialization(
                "denominators must be positive".into(),
            ));
        }
        ExponentPair::new(rat(self.k_num, self.k_den), rat(self.l_num, self.l_den))?
            .with_epsilon(self.epsilon)
            .with_word(self.word.clone())
    }
}

/// Closure of the seeds under all A/B words of length `<= max_word_length`.
///
/// Breadth-first by word length, so each point keeps a shortest word. The
/// expansion of one level may run in parallel; merging is sequential in a
/// fixed order, so the result does not depend on `exec`.
pub fn enumerate_pairs(seeds: &PairSet, max_word_length: usize, exec: Execution) -> PairSet {
    let seed_entries: Vec<PairEntry> = if seeds.seeds().is_empty() {
        seeds.entries().to_vec()
    } else {
        seeds.seeds().to_vec()
    };
    let mut best: BTreeMap<Point, PairEntry> = BTreeMap::new();
    for e in &seed_entries {
        let mut e = e.clone();
        e.pair = e.pair.with_word(String::new()).expect("empty word");
        insert_preferred(&mut best, e);
    }
    let mut frontier: Vec<PairEntry> = best.values().cloned().collect();

    for _ in 0..max_word_length {
        if frontier.is_empty() {
            break;
        }
        let children: Vec<[PairEntry; 2]> = exec.map(&frontier, |e| {
            [
                PairEntry {
                    pair: e.pair.a_process(),
                    seed: e.seed.clone(),
                },
                PairEntry {
                    pair: e.pair.b_process(),
                    seed: e.seed.clone(),
                },
            ]
        });
        let mut level: BTreeMap<Point, PairEntry> = BTreeMap::new();
        for child in children.into_iter().flatten() {
            if best.contains_key(&point_of(&child.pair)) {
                continue;
            }
            insert_preferred(&mut level, child);
        }
        frontier = level.values().cloned().collect();
        best.extend(level);
    }

    PairSet {
        seeds: seed_entries,
        entries: best.into_values().collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trivial_set() -> PairSet {
        PairSet::from_seed_names(&["trivial"]).unwrap()
    }

    fn points(set: &PairSet) -> Vec<(Rational, Rational)> {
        set.pairs().map(point_of).collect()
    }

    #[test]
    fn depth_zero_is_the_seed() {
        let set = enumerate_pairs(&trivial_set(), 0, Execution::Serial);
        assert_eq!(points(&set), vec![(rat(0, 1), rat(1, 1))]);
    }

    #[test]
    fn depth_two_from_trivial() {
        let set = enumerate_pairs(&trivial_set(), 2, Execution::Serial);
        assert_eq!(
            points(&set),
            vec![
                (rat(0, 1), rat(1, 1)),
                (rat(1, 6), rat(2, 3)),
                (rat(1, 2), rat(1, 2)),
            ]
        );
        let words: Vec<&str> = set.pairs().map(|p| p.word()).collect();
        assert_eq!(words, vec!["", "AB", "B"]);
    }

    #[test]
    fn depth_three_reaches_aab() {
        let set = enumerate_pairs(&trivial_set(), 3, Execution::Serial);
        assert!(set.contains_point(&rat(1, 14), &rat(11, 14)));
        let p = set
            .pairs()
            .find(|p| p.point() == (&rat(1, 14), &rat(11, 14)))
            .unwrap();
        assert_eq!(p.word(), "AAB");
    }

    #[test]
    fn parallel_enumeration_matches_serial() {
        let seeds = PairSet::from_seed_names(&["trivial", "huxley-32-205"]).unwrap();
        let a = enumerate_pairs(&seeds, 8, Execution::Serial);
        let b = enumerate_pairs(&seeds, 8, Execution::Parallel { threads: 3 });
        assert_eq!(a, b);
    }

    #[test]
    fn non_epsilon_word_preferred_for_shared_points() {
        let seeds = PairSet::from_seeds(vec![
            ("eps", named_seed("trivial").unwrap().with_epsilon(true)),
            ("plain", named_seed("trivial").unwrap()),
        ]);
        let set = enumerate_pairs(&seeds, 2, Execution::Serial);
        assert!(set.pairs().all(|p| !p.carries_epsilon()));
    }

    #[test]
    fn csv_and_json_round_trip() {
        let seeds = PairSet::from_seed_names(&["trivial", "huxley-89-570"]).unwrap();
        let set = enumerate_pairs(&seeds, 4, Execution::Serial);
        let mut buf = Vec::new();
        set.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("k_num,k_den,l_num,l_den,word,epsilon\n"));
        let back = PairSet::read_csv(buf.as_slice(), "file").unwrap();
        assert_eq!(back.records().unwrap(), set.records().unwrap());

        let json = set.to_json().unwrap();
        let back = PairSet::from_json(&json, "file").unwrap();
        assert_eq!(back.records().unwrap(), set.records().unwrap());
    }

    #[test]
    fn rejects_bad_serialized_rows() {
        let text = "k_num,k_den,l_num,l_den,word,epsilon\n3,4,1,1,,false\n";
        assert!(PairSet::read_csv(text.as_bytes(), "f").is_err());
        let text = "k,l\n0,1\n";
        assert!(PairSet::read_csv(text.as_bytes(), "f").is_err());
    }

    #[test]
    fn unknown_seed_is_an_error() {
        assert_eq!(
            named_seed("bogus"),
            Err(CalcError::UnknownSeed("bogus".into()))
        );
    }
}
