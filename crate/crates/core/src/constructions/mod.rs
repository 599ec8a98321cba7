//! Builders for every concrete ring in the corpus: group algebras,
//! exterior algebras, matrix algebras, small controls, and the
//! derivation-twisted matrix ring family, plus the textual build-spec
//! parser used by the command-line interface.

pub mod builders;
pub mod groups;
pub mod twisted;

pub use builders::{
    exterior_algebra, field_product, group_algebra, matrix_algebra,
    truncated_polynomial_algebra,
};
pub use groups::GroupTable;
pub use twisted::{RatMat, TwistedElement, TwistedRing};

use crate::error::{Error, Result};
use crate::finalg::StructureAlgebra;

/// Result of parsing a build spec: either a finite structure-constant
/// algebra or a member of the twisted family.
pub enum BuildTarget {
    Finite(StructureAlgebra),
    Twisted(TwistedRing),
}

/// Parses build specs of the form
/// `exterior:p=3,d=3`, `group:q8,p=2`, `matrix:p=2,N=2`, `prop29:p=5,n=3`,
/// `trunc:p=3,k=3`, `product:p=2,m=2`.
pub fn parse_build_spec(spec: &str) -> Result<BuildTarget> {
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| Error::Parse {
            at: 0,
            message: format!("build spec '{spec}' has no ':' separator"),
        })?;
    let mut group_name = None;
    let mut params = std::collections::BTreeMap::new();
    for piece in rest.split(',').filter(|s| !s.is_empty()) {
        match piece.split_once('=') {
            Some((k, v)) => {
                let value: u64 = v.parse().map_err(|_| Error::Parse {
                    at: 0,
                    message: format!("parameter '{piece}' is not an integer assignment"),
                })?;
                params.insert(k.to_ascii_lowercase(), value);
            }
            None => group_name = Some(piece.to_ascii_lowercase()),
        }
    }
    let need = |key: &str| -> Result<u64> {
        params.get(key).copied().ok_or_else(|| Error::Parse {
            at: 0,
            message: format!("build spec '{spec}' is missing parameter '{key}'"),
        })
    };
    match kind.to_ascii_lowercase().as_str() {
        "group" => {
            let p = need("p")?;
            let name = group_name.ok_or_else(|| Error::Parse {
                at: 0,
                message: "group spec needs a group name, e.g. group:q8,p=2".into(),
            })?;
            let table = match name.as_str() {
                "q8" => GroupTable::quaternion(),
                "d4" => GroupTable::dihedral4(),
                other => {
                    if let Some(m) = other.strip_prefix('c') {
                        let m: usize = m.parse().map_err(|_| Error::Parse {
                            at: 0,
                            message: format!("unknown group '{other}'"),
                        })?;
                        GroupTable::cyclic(m)?
                    } else {
                        return Err(Error::Parse {
                            at: 0,
                            message: format!("unknown group '{other}'"),
                        });
                    }
                }
            };
            Ok(BuildTarget::Finite(group_algebra(&table, p)?))
        }
        "exterior" => Ok(BuildTarget::Finite(exterior_algebra(
            need("p")?,
            need("d")? as u32,
        )?)),
        "matrix" => Ok(BuildTarget::Finite(matrix_algebra(
            need("p")?,
            need("n")? as usize,
        )?)),
        "trunc" => Ok(BuildTarget::Finite(truncated_polynomial_algebra(
            need("p")?,
            need("k")? as usize,
        )?)),
        "product" => Ok(BuildTarget::Finite(field_product(
            need("p")?,
            need("m")? as usize,
        )?)),
        "prop29" => Ok(BuildTarget::Twisted(TwistedRing::new(
            need("p")?,
            need("n")? as usize,
        )?)),
        other => Err(Error::Parse {
            at: 0,
            message: format!("unknown build kind '{other}'"),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_specs_parse() {
        assert!(matches!(
            parse_build_spec("group:q8,p=2").unwrap(),
            BuildTarget::Finite(a) if a.dim() == 8
        ));
        assert!(matches!(
            parse_build_spec("exterior:p=3,d=3").unwrap(),
            BuildTarget::Finite(a) if a.dim() == 8
        ));
        assert!(matches!(
            parse_build_spec("matrix:p=2,N=2").unwrap(),
            BuildTarget::Finite(a) if a.dim() == 4
        ));
        assert!(matches!(
            parse_build_spec("prop29:p=5,n=3").unwrap(),
            BuildTarget::Twisted(r) if r.index() == 3 && r.matrix_size() == 5
        ));
        assert!(matches!(
            parse_build_spec("trunc:p=3,k=3").unwrap(),
            BuildTarget::Finite(a) if a.dim() == 3
        ));
        assert!(matches!(
            parse_build_spec("product:p=2,m=2").unwrap(),
            BuildTarget::Finite(a) if a.dim() == 2
        ));
    }

    #[test]
    fn bad_specs_are_rejected() {
        assert!(parse_build_spec("nonsense").is_err());
        assert!(parse_build_spec("group:q9,p=2").is_err());
        assert!(parse_build_spec("exterior:p=3").is_err());
        assert!(parse_build_spec("matrix:p=4,N=2").is_err());
    }
}
