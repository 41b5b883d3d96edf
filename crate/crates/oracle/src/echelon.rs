use std::collections::{BTreeMap, HashMap};

/// Row echelon form over `F_p` with sparse rows; each stored row has a
/// leading coefficient 1 at its pivot column.
pub(crate) struct Echelon {
    p: u64,
    rows: HashMap<usize, Vec<(usize, u64)>>,
}

fn inverse(a: u64, p: u64) -> u64 {
    let mut r = 1u64;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

impl Echelon {
    pub(crate) fn new(p: u64) -> Self {
        Echelon { p, rows: HashMap::new() }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    /// Clears every pivot column of `v`.
    pub(crate) fn reduce(&self, v: &mut BTreeMap<usize, u64>) {
        let p = self.p;
        let mut cursor = 0;
        while let Some((&col, &c)) = v.range(cursor..).find(|(k, _)| self.rows.contains_key(k)) {
            let row = &self.rows[&col];
            for &(k, a) in row {
                let slot = v.entry(k).or_insert(0);
                *slot = (*slot + (p - c) * a) % p;
                if *slot == 0 {
                    v.remove(&k);
                }
            }
            cursor = col + 1;
        }
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub(crate) fn insert(&mut self, mut v: BTreeMap<usize, u64>) -> bool {
        self.reduce(&mut v);
        let Some((&lead, &c)) = v.iter().next() else {
            return false;
        };
        let inv = inverse(c, self.p);
        let row = v.into_iter().map(|(k, a)| (k, a * inv % self.p)).collect();
        self.rows.insert(lead, row);
        true
    }
}
