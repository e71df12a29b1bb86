//! JSON file formats for states, state pairs and channels.
//!
//! ```text
//! state:    {"dim": d, "re": [[..]], "im": [[..]]}
//! pair:     {"rho": <state>, "sigma": <state>}
//! channel:  {"d_in": .., "d_out": .., "kraus": [{"re": [[..]], "im": [[..]]}, ..]}
//! ```
//!
//! `im` may be omitted for real matrices. Parsing never panics on malformed
//! input; every failure is a [`FormatError`].

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::channel::KrausChannel;
use crate::error::Error;
use crate::linalg::{matrix_from_parts, CMatrix, HermitianMatrix, DEFAULT_DIM_CAP};
use crate::ns::ClassicalPair;
use crate::state::{DensityOperator, StatePair};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Invalid(#[from] Error),
}

impl FormatError {
    pub fn exit_code(&self) -> i32 {
        match self {
            FormatError::Json(_) => 2,
            FormatError::Invalid(e) => e.exit_code(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub re: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub im: Vec<Vec<f64>>,
}

impl MatrixJson {
    pub fn from_matrix(m: &CMatrix) -> Self {
        let re = (0..m.nrows())
            .map(|i| (0..m.ncols()).map(|j| m[(i, j)].re).collect())
            .collect();
        let im = (0..m.nrows())
            .map(|i| (0..m.ncols()).map(|j| m[(i, j)].im).collect())
            .collect();
        Self { re, im }
    }

    fn shape_checked(&self, rows: usize, cols: usize) -> Result<CMatrix, Error> {
        if self.re.len() != rows || self.re.iter().any(|r| r.len() != cols) {
            return Err(Error::validation(
                format!("expected a {rows}x{cols} real part"),
                self.re.len() as f64,
            ));
        }
        matrix_from_parts(&self.re, &self.im)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateJson {
    pub dim: usize,
    #[serde(flatten)]
    pub matrix: MatrixJson,
}

impl StateJson {
    pub fn from_state(rho: &DensityOperator) -> Self {
        Self {
            dim: rho.dim(),
            matrix: MatrixJson::from_matrix(rho.matrix().matrix()),
        }
    }

    pub fn to_state(&self, cap: usize) -> Result<DensityOperator, Error> {
        if self.dim == 0 || self.dim > cap {
            return Err(Error::validation(
                format!("state dimension must be in 1..={cap}"),
                self.dim as f64,
            ));
        }
        let m = self.matrix.shape_checked(self.dim, self.dim)?;
        DensityOperator::new(HermitianMatrix::new(m)?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatePairJson {
    pub rho: StateJson,
    pub sigma: StateJson,
}

impl StatePairJson {
    pub fn from_pair(pair: &StatePair) -> Self {
        Self {
            rho: StateJson::from_state(pair.rho()),
            sigma: StateJson::from_state(pair.sigma()),
        }
    }

    pub fn to_pair(&self, cap: usize) -> Result<StatePair, Error> {
        StatePair::new(self.rho.to_state(cap)?, self.sigma.to_state(cap)?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChannelJson {
    pub d_in: usize,
    pub d_out: usize,
    pub kraus: Vec<MatrixJson>,
}

impl ChannelJson {
    pub fn from_channel(ch: &KrausChannel) -> Self {
        Self {
            d_in: ch.d_in(),
            d_out: ch.d_out(),
            kraus: ch.kraus().iter().map(MatrixJson::from_matrix).collect(),
        }
    }

    pub fn to_channel(&self, cap: usize) -> Result<KrausChannel, Error> {
        if self.d_in == 0 || self.d_out == 0 || self.d_in > cap || self.d_out > cap {
            return Err(Error::validation(
                format!("channel dimensions must be in 1..={cap}"),
                self.d_in.max(self.d_out) as f64,
            ));
        }
        if self.kraus.len() > cap {
            return Err(Error::validation(
                format!("at most {cap} Kraus operators"),
                self.kraus.len() as f64,
            ));
        }
        let ops = self
            .kraus
            .iter()
            .map(|k| k.shape_checked(self.d_out, self.d_in))
            .collect::<Result<Vec<_>, _>>()?;
        KrausChannel::new(ops)
    }
}

/// A single channel or a list of channels.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ChannelsJson {
    One(ChannelJson),
    Many(Vec<ChannelJson>),
}

pub fn parse_state(text: &str) -> Result<DensityOperator, FormatError> {
    let raw: StateJson = serde_json::from_str(text)?;
    Ok(raw.to_state(DEFAULT_DIM_CAP)?)
}

pub fn parse_state_pair(text: &str) -> Result<StatePair, FormatError> {
    let raw: StatePairJson = serde_json::from_str(text)?;
    Ok(raw.to_pair(DEFAULT_DIM_CAP)?)
}

pub fn parse_channel(text: &str) -> Result<KrausChannel, FormatError> {
    let raw: ChannelJson = serde_json::from_str(text)?;
    Ok(raw.to_channel(DEFAULT_DIM_CAP)?)
}

pub fn parse_channels(text: &str) -> Result<Vec<KrausChannel>, FormatError> {
    let raw: ChannelsJson = serde_json::from_str(text)?;
    let list = match raw {
        ChannelsJson::One(c) => vec![c],
        ChannelsJson::Many(v) => v,
    };
    Ok(list
        .iter()
        .map(|c| c.to_channel(DEFAULT_DIM_CAP))
        .collect::<Result<Vec<_>, _>>()?)
}

pub fn parse_classical_pair(text: &str) -> Result<ClassicalPair, FormatError> {
    Ok(serde_json::from_str(text)?)
}
