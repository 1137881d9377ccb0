//! Group files: `{ "name", "degree", "generators": [[image, ...], ...] }` with
//! points numbered from 1.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::perm::{PermGroup, Permutation};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
}

impl GroupFile {
    pub fn from_group(name: impl Into<String>, g: &PermGroup) -> Self {
        GroupFile {
            name: name.into(),
            degree: g.degree(),
            generators: g.generators().iter().map(|s| s.images().iter().map(|&x| x + 1).collect()).collect(),
        }
    }

    pub fn to_group(&self) -> Result<PermGroup> {
        let gens = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, images)| {
                if images.len() != self.degree {
                    return Err(Error::Input(format!(
                        "generator {i} has {} images but the degree is {}",
                        images.len(),
                        self.degree
                    )));
                }
                if images.iter().any(|&x| x == 0 || x as usize > self.degree) {
                    return Err(Error::Input(format!("generator {i} has a point outside 1..={}", self.degree)));
                }
                let zero_based: Vec<u32> = images.iter().map(|&x| x - 1).collect();
                Permutation::from_images(&zero_based)
            })
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(self.degree.max(1), gens)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("group files always serialize")
    }

    pub fn from_json(text: &str, locus: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            locus: format!("{locus}:{}:{}", e.line(), e.column()),
            message: e.to_string(),
        })
    }
}

pub fn read_group(path: impl AsRef<Path>) -> Result<(String, PermGroup)> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    let file = GroupFile::from_json(&text, &path.display().to_string())?;
    let g = file.to_group()?;
    Ok((file.name, g))
}

pub fn write_group(name: &str, g: &PermGroup, path: impl AsRef<Path>) -> Result<()> {
    let mut text = GroupFile::from_group(name, g).to_json();
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}
