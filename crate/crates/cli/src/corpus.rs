use std::io;
use std::path::Path;

use blockscope_core::io::GroupFile;
use blockscope_core::perm::PermGroup;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    /// File name relative to the corpus directory.
    pub file: String,
    pub name: String,
    pub group: PermGroup,
}

/// A corpus file that could not be turned into a group.
#[derive(Clone, Debug)]
pub struct Rejected {
    pub file: String,
    pub reason: String,
}

/// Loads every `*.json` group file directly inside `dir`, sorted by file name.
/// Unreadable or malformed files are returned separately instead of aborting.
pub fn load_corpus(dir: &Path) -> io::Result<(Vec<CorpusEntry>, Vec<Rejected>)> {
    let mut files: Vec<_> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let mut entries = Vec::new();
    let mut rejected = Vec::new();
    for path in files {
        let file = path.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default();
        let parsed = std::fs::read_to_string(&path)
            .map_err(|e| e.to_string())
            .and_then(|text| GroupFile::from_json(&text, &file).map_err(|e| e.to_string()))
            .and_then(|gf| gf.to_group().map(|g| (gf.name, g)).map_err(|e| e.to_string()));
        match parsed {
            Ok((name, group)) => entries.push(CorpusEntry { file, name, group }),
            Err(reason) => rejected.push(Rejected { file, reason }),
        }
    }
    Ok((entries, rejected))
}
