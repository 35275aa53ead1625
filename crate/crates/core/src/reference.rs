//! Known unsensed counts of r-regular torus maps, rows v = 1..=10.
//! For odd r the row index v stands for 2v vertices.

use crate::counts::Count;

const VALUES: [[&str; 4]; 10] = [
    ["1", "1", "13", "3"],
    ["5", "4", "3523", "61"],
    ["40", "20", "2035550", "1936"],
    ["450", "133", "1421177130", "89986"],
    ["6370", "1013", "1055597813091", "4791784"],
    ["104498", "9209", "812108624237833", "272005507"],
    ["1843324", "89889", "640086212334600319", "15929826713"],
    ["33778574", "929373", "513617627395229165708", "951610091294"],
    ["632053347", "9880120", "417872608954804473932525", "57659992554993"],
    ["11983323029", "107087360", "343735500499416537210021983", "3532378891197016"],
];

pub const MAX_V: usize = 10;

/// Published value for regularity r in 3..=6 and row v in 1..=10.
pub fn reference_unsensed(r: usize, v: usize) -> Option<Count> {
    if !(3..=6).contains(&r) || !(1..=MAX_V).contains(&v) {
        return None;
    }
    Some(VALUES[v - 1][r - 3].parse().expect("embedded value"))
}

/// Every (r, v, value) triple.
pub fn reference_table() -> Vec<(usize, usize, Count)> {
    let mut out = Vec::with_capacity(40);
    for r in 3..=6 {
        for v in 1..=MAX_V {
            out.push((r, v, reference_unsensed(r, v).expect("in range")));
        }
    }
    out
}
