//! `graded pullback`: the symbolic pullbacks in canonical text form.

use std::fmt;
use std::str::FromStr;

use anyhow::Result;
use coordinate_ring::{pullback_chi0, pullback_mu, pullback_projector, pullback_tau, pullback_theta, RingMorphism};
use serde::Serialize;

use crate::Loaded;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    Mu,
    Tau,
    Chi0,
    Theta,
}

impl FromStr for Which {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "mu" => Ok(Which::Mu),
            "tau" => Ok(Which::Tau),
            "chi0" => Ok(Which::Chi0),
            "theta" => Ok(Which::Theta),
            other => Err(format!("unknown pullback `{other}`: expected mu, tau, chi0 or theta")),
        }
    }
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Which::Mu => "mu",
            Which::Tau => "tau",
            Which::Chi0 => "chi0",
            Which::Theta => "theta",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PullbackImage {
    pub generator: String,
    pub image: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct PullbackReport {
    pub which: String,
    pub projected: bool,
    pub images: Vec<PullbackImage>,
}

/// The requested pullback, precomposed with the projector pullback `p^*`
/// when `project` is set (so `y ↦ χ_0^*(p^*(y))` for `chi0`).
pub fn pullback(loaded: &Loaded, which: Which, project: bool) -> Result<RingMorphism> {
    let m = match which {
        Which::Mu => pullback_mu(&loaded.space),
        Which::Theta => pullback_theta(&loaded.space),
        Which::Tau => pullback_tau(valid_form(loaded)?)?,
        Which::Chi0 => pullback_chi0(valid_form(loaded)?)?,
    };
    if !project {
        return Ok(m);
    }
    let p = pullback_projector(valid_form(loaded)?)?;
    Ok(p.then(&m)?)
}

fn valid_form(loaded: &Loaded) -> Result<&bilinear_forms::BilinearForm> {
    let beta = loaded.require_form()?;
    beta.validate()?;
    Ok(beta)
}

pub fn report(which: Which, project: bool, m: &RingMorphism) -> PullbackReport {
    PullbackReport {
        which: which.to_string(),
        projected: project,
        images: m
            .images()
            .iter()
            .enumerate()
            .map(|(i, img)| PullbackImage {
                generator: m.source().name(i).to_string(),
                image: img.to_string(),
            })
            .collect(),
    }
}
