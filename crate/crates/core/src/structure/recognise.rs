use super::closure::{center, derived_subgroup};
use super::pgroup::is_elementary_abelian;
use crate::error::Result;
use crate::group::PermGroup;

/// `Q8`: order 8, nonabelian, a single involution.
pub fn is_quaternion8(group: &PermGroup) -> Result<bool> {
    if group.order() != 8 || group.is_abelian() {
        return Ok(false);
    }
    Ok(group.elements()?.iter().filter(|g| g.order() == 2).count() == 1)
}

/// `SL2(2) ≅ Sym(3)`: order 6 and nonabelian. `SL2(3)`: order 24 with
/// derived subgroup `Q8` and centre of order 2.
pub fn is_sl2(group: &PermGroup, p: u128) -> Result<bool> {
    match p {
        2 => Ok(group.order() == 6 && !group.is_abelian()),
        3 => Ok(group.order() == 24
            && is_quaternion8(&derived_subgroup(group))?
            && center(group)?.order() == 2),
        _ => Ok(false),
    }
}

/// `Alt(4)`: order 12, derived subgroup elementary abelian of order 4,
/// trivial centre.
pub fn is_alt4(group: &PermGroup) -> Result<bool> {
    let d = derived_subgroup(group);
    Ok(group.order() == 12 && d.order() == 4 && is_elementary_abelian(&d) && center(group)?.is_trivial())
}
