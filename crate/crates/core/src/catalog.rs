//! Named profiles, addressable by label from the CLI and the claim registry.
//!
//! | label                    | variety                                         |
//! |--------------------------|-------------------------------------------------|
//! | `cubic-surface`          | cubic surface on the symbols `H = -K`, `F`      |
//! | `k3-quartic`             | quartic surface in `P^3`                        |
//! | `dp-surface-d<d>`        | del Pezzo surface of degree `d`, blow-up basis  |
//! | `dp3-degree<d>`          | del Pezzo threefold, default `b_3`              |
//! | `dp3-degree<d>-b<b3>`    | del Pezzo threefold with the given `b_3`        |
//! | `hyp-n<n>-d<d>`          | smooth degree-`d` hypersurface in `P^(n+1)`     |

use crate::error::{Error, Result};
use crate::hypersurface::{hypersurface_profile, HypersurfaceSpec};
use crate::profile::BaseProfile;
use crate::surface::{cubic_surface_profile, lattice_profile, surface_lattice};
use crate::threefold::{default_b3, threefold_profile};

pub fn cubic_surface() -> BaseProfile {
    cubic_surface_profile()
}

pub fn del_pezzo_threefold(d: u32, b3: u32) -> BaseProfile {
    threefold_profile(d, b3).expect("positive degree")
}

pub fn k3_quartic() -> BaseProfile {
    hypersurface_profile(HypersurfaceSpec::new(2, 4).expect("valid")).relabel("k3-quartic")
}

pub fn by_label(label: &str) -> Result<BaseProfile> {
    let unknown = || Error::UnknownProfile(label.to_string());
    let num = |s: &str| s.parse::<u32>().map_err(|_| unknown());
    match label {
        "cubic-surface" => return Ok(cubic_surface()),
        "k3-quartic" => return Ok(k3_quartic()),
        _ => {}
    }
    if let Some(d) = label.strip_prefix("dp-surface-d") {
        return surface_lattice(num(d)?)
            .map(|l| lattice_profile(&l))
            .map_err(|_| unknown());
    }
    if let Some(rest) = label.strip_prefix("dp3-degree") {
        let (d, b3) = match rest.split_once("-b") {
            Some((d, b3)) => (num(d)?, num(b3)?),
            None => {
                let d = num(rest)?;
                (d, default_b3(d).ok_or_else(unknown)?)
            }
        };
        if d == 0 {
            return Err(unknown());
        }
        return threefold_profile(d, b3);
    }
    if let Some(rest) = label.strip_prefix("hyp-n") {
        let (n, d) = rest.split_once("-d").ok_or_else(unknown)?;
        let spec = HypersurfaceSpec::new(num(n)?, num(d)?).map_err(|_| unknown())?;
        return Ok(hypersurface_profile(spec));
    }
    Err(unknown())
}

/// Labels of the fixed catalogue entries (parametric families excluded).
pub fn standard_labels() -> Vec<String> {
    let mut out = vec!["cubic-surface".to_string(), "k3-quartic".to_string()];
    out.extend((1..=7).map(|d| format!("dp-surface-d{d}")));
    out.extend((1..=5).map(|d| format!("dp3-degree{d}")));
    out
}
