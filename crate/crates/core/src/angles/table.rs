//! Which fixed angles are complements of the fractional parts, per family
//! and parities of `(k, l)`. Bit `j` of a mask marks the `j`-th angle.

use crate::builders::Family;

type Row = (Family, bool, [bool; 2]);

const E: bool = false;
const O: bool = true;

macro_rules! rows {
    ($mask:expr => $( $fam:ident $bar:literal $k:ident $l:ident ),* $(,)?) => {
        &[ $( ((Family::$fam, $bar, [$k, $l]), $mask) ),* ]
    };
}

/// The encoded table. `Family::P` is listed with even parities.
static TABLE: &[&[(Row, u8)]] = &[
    // Σ even
    rows!(0b0000 => P false E E, X false E E, X true E E, R false E E, R true E E, U false E E, U true E E),
    rows!(0b0011 => R false O O, XPrime true E O, Z false E O, V false E E, V true O O),
    rows!(0b0101 => X false O O, X true O O, U false O O, U true O O),
    rows!(0b1001 => R true O O, XPrime false E O, Z true E O, VPrime false O O, VPrime true E E),
    rows!(0b0110 => XPrime true O E, Z false O E, S true E E, V false O O, V true E E),
    rows!(0b1010 => ZPrime false E E, ZPrime true E E, W false O O, W true O O),
    rows!(0b1100 => S false E E, XPrime false O E, Z true O E, VPrime false E E, VPrime true O O),
    rows!(0b1111 => S false O O, S true O O, ZPrime false O O, ZPrime true O O, W false E E, W true E E),
    // Σ odd
    rows!(0b0001 => X false O E, X true O E, R false O E, R true O E, U false O E, U true E O),
    rows!(0b0010 => R false E O, XPrime true O O, Z false O O, V false O E, V true O E),
    rows!(0b0100 => X false E O, X true E O, U false E O, U true O E),
    rows!(0b1000 => R true E O, XPrime false O O, Z true O O, VPrime false E O, VPrime true E O),
    rows!(0b1110 => S false E O, S true E O, ZPrime false E O, ZPrime true O E, W false O E, W true E O),
    rows!(0b1101 => XPrime false E E, Z true E E, S false O E, VPrime false O E, VPrime true O E),
    rows!(0b1011 => ZPrime false O E, ZPrime true E O, W false E O, W true O E),
    rows!(0b0111 => XPrime true E E, Z false E E, S true O E, V false E O, V true E O),
];

/// Complement mask for a primitive core, or `None` when the table has no
/// row for it.
pub fn lookup(family: Family, barred: bool, k: usize, l: usize) -> Option<u8> {
    let key = (family, barred, [k % 2 == 1, l % 2 == 1]);
    let mut hit = None;
    for group in TABLE {
        for &(row, mask) in group.iter() {
            if row == key {
                debug_assert!(hit.is_none(), "duplicate row for {key:?}");
                hit = Some(mask);
            }
        }
    }
    hit
}

/// Every row of the table, for exhaustiveness checks.
pub fn rows() -> impl Iterator<Item = (Family, bool, [bool; 2], u8)> {
    TABLE.iter().flat_map(|g| g.iter().map(|&((f, b, p), m)| (f, b, p, m)))
}
