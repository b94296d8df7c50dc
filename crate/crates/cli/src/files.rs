//! JSON input formats.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{bail, Context};
use jordanopt::{BlockHermitian, CMatrix, Complex, ProcessChoi, SystemSpec};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockJson {
    pub re: Vec<Vec<f64>>,
    #[serde(default)]
    pub im: Option<Vec<Vec<f64>>>,
}

/// `{"system": [..], "blocks": [{"re": [[..]], "im": [[..]]}, ..]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub system: Vec<usize>,
    pub blocks: Vec<BlockJson>,
}

/// `{"input": [..], "output": [..], "choi": [{"re": .., "im": ..}, ..]}`,
/// one Choi block per block of `input ⊗ output` in row-major order.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProcessFile {
    pub input: Vec<usize>,
    pub output: Vec<usize>,
    pub choi: Vec<BlockJson>,
}

fn default_tolerance() -> f64 {
    1e-9
}

/// `{"systems": {"label": [..]}, "tolerance": 1e-9, "seed": 0}`
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TheorySpecFile {
    pub systems: BTreeMap<String, Vec<usize>>,
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    #[serde(default)]
    pub seed: u64,
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> anyhow::Result<T> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn block_matrix(b: &BlockJson, n: usize, field: &str) -> anyhow::Result<CMatrix<f64>> {
    let check = |rows: &Vec<Vec<f64>>, part: &str| -> anyhow::Result<()> {
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            bail!("{field}.{part}: expected a {n}x{n} array");
        }
        Ok(())
    };
    check(&b.re, "re")?;
    if let Some(im) = &b.im {
        check(im, "im")?;
    }
    Ok(CMatrix::from_fn(n, n, |r, c| {
        Complex::new(b.re[r][c], b.im.as_ref().map_or(0.0, |im| im[r][c]))
    }))
}

fn blocks_for(system: &SystemSpec, blocks: &[BlockJson], field: &str) -> anyhow::Result<BlockHermitian<f64>> {
    if blocks.len() != system.num_blocks() {
        bail!("{field}: system ({system}) has {} blocks, file has {}", system.num_blocks(), blocks.len());
    }
    let mats = blocks
        .iter()
        .enumerate()
        .map(|(i, b)| block_matrix(b, system.block(i), &format!("{field}[{i}]")))
        .collect::<anyhow::Result<Vec<_>>>()?;
    BlockHermitian::new(system.clone(), mats).with_context(|| field.to_string())
}

impl MatrixFile {
    pub fn to_element(&self) -> anyhow::Result<BlockHermitian<f64>> {
        let system = SystemSpec::new(self.system.clone()).context("system")?;
        blocks_for(&system, &self.blocks, "blocks")
    }
}

impl ProcessFile {
    pub fn to_process(&self) -> anyhow::Result<ProcessChoi<f64>> {
        let input = SystemSpec::new(self.input.clone()).context("input")?;
        let output = SystemSpec::new(self.output.clone()).context("output")?;
        let (composite, _) = jordanopt::tensor_system(&input, &output);
        let choi = blocks_for(&composite, &self.choi, "choi")?;
        Ok(ProcessChoi::new(input, output, choi)?)
    }
}
