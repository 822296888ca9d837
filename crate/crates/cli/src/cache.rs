//! Content-addressed module cache.
//!
//! Entry layout (little-endian):
//!
//! ```text
//! magic    b"SYMC"
//! version  u32      CACHE_VERSION
//! d, p, dim u32
//! label    u32 length + UTF-8
//! hash     64 ASCII hex digits, the module's content hash
//! gens     u32 count + matrices in the GF(p) binary format
//! ```
//!
//! Entries are keyed by the expression, field, degree, seed and tool
//! version. A damaged entry is reported on stderr and rebuilt; a failed
//! write is an error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use symrep::ffield::{serial, Fp};
use symrep::modrep::GroupModule;

use crate::CliError;

pub const CACHE_VERSION: u32 = 1;
const MAGIC: &[u8; 4] = b"SYMC";

pub struct Cache {
    dir: PathBuf,
    version: String,
}

#[derive(Debug, PartialEq, Eq)]
pub enum Lookup {
    Hit(GroupModule),
    Miss,
    Corrupt(String),
}

impl Cache {
    pub fn open(dir: &Path) -> Result<Self, CliError> {
        Self::with_version(dir, env!("CARGO_PKG_VERSION"))
    }

    pub fn with_version(dir: &Path, version: &str) -> Result<Self, CliError> {
        fs::create_dir_all(dir).map_err(|e| CliError::Cache(format!("cannot create {}: {e}", dir.display())))?;
        Ok(Cache { dir: dir.to_path_buf(), version: version.to_string() })
    }

    pub fn key(&self, expr: &str, p: u32, d: usize, seed: u64) -> String {
        let mut h = Sha256::new();
        h.update(b"symrep-cache");
        h.update(CACHE_VERSION.to_le_bytes());
        h.update(self.version.as_bytes());
        h.update([0]);
        h.update(expr.as_bytes());
        h.update([0]);
        h.update(p.to_le_bytes());
        h.update((d as u64).to_le_bytes());
        h.update(seed.to_le_bytes());
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.bin"))
    }

    pub fn get(&self, key: &str) -> Lookup {
        match fs::read(self.path(key)) {
            Ok(bytes) => match decode_entry(&bytes) {
                Ok(m) => Lookup::Hit(m),
                Err(why) => Lookup::Corrupt(why),
            },
            Err(_) => Lookup::Miss,
        }
    }

    /// Writes through a temporary file so readers never see half an entry.
    pub fn put(&self, key: &str, m: &GroupModule) -> Result<(), CliError> {
        let path = self.path(key);
        let tmp = self.dir.join(format!("{key}.{}.tmp", std::process::id()));
        let bytes = encode_entry(m);
        let write = || -> std::io::Result<()> {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(&bytes)?;
            f.sync_all()?;
            fs::rename(&tmp, &path)
        };
        write().map_err(|e| {
            let _ = fs::remove_file(&tmp);
            CliError::Cache(format!("cannot write {}: {e}", path.display()))
        })
    }
}

pub fn encode_entry(m: &GroupModule) -> Vec<u8> {
    let mut out = Vec::new();
    out.extend_from_slice(MAGIC);
    for x in [CACHE_VERSION, m.d() as u32, m.p(), m.dim() as u32] {
        out.extend_from_slice(&x.to_le_bytes());
    }
    out.extend_from_slice(&(m.label().len() as u32).to_le_bytes());
    out.extend_from_slice(m.label().as_bytes());
    out.extend_from_slice(m.content_hash().as_bytes());
    out.extend_from_slice(&(m.gens().len() as u32).to_le_bytes());
    for g in m.gens() {
        serial::encode(g, &mut out);
    }
    out
}

pub fn decode_entry(bytes: &[u8]) -> Result<GroupModule, String> {
    let mut r = Reader { bytes, pos: 0 };
    if r.take(4)? != MAGIC {
        return Err("bad magic".into());
    }
    let version = r.u32()?;
    if version != CACHE_VERSION {
        return Err(format!("entry version {version}, expected {CACHE_VERSION}"));
    }
    let (d, p, dim) = (r.u32()? as usize, r.u32()?, r.u32()? as usize);
    let n = r.u32()? as usize;
    let label = String::from_utf8(r.take(n)?.to_vec()).map_err(|_| "label is not UTF-8".to_string())?;
    let hash = std::str::from_utf8(r.take(64)?).map_err(|_| "hash is not ASCII".to_string())?.to_string();
    let count = r.u32()? as usize;
    let mut gens = Vec::with_capacity(count);
    for _ in 0..count {
        let (g, used) = serial::decode(&bytes[r.pos..]).map_err(|e| e.to_string())?;
        r.pos += used;
        gens.push(g);
    }
    if r.pos != bytes.len() {
        return Err("trailing bytes".into());
    }
    let f = Fp::new(p).map_err(|e| e.to_string())?;
    let m = GroupModule::with_dim(d, f, dim, gens).map_err(|e| e.to_string())?.labeled(label);
    if m.content_hash() != hash {
        return Err("content hash mismatch".into());
    }
    Ok(m)
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8], String> {
        let end = self.pos.checked_add(n).filter(|&e| e <= self.bytes.len()).ok_or("truncated entry")?;
        let s = &self.bytes[self.pos..end];
        self.pos = end;
        Ok(s)
    }

    fn u32(&mut self) -> Result<u32, String> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().expect("four bytes")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use symrep::specht::specht_module;

    fn module() -> GroupModule {
        specht_module(&"31^2".parse().unwrap(), Fp::new(5).unwrap()).0
    }

    #[test]
    fn entry_round_trip() {
        let m = module();
        let back = decode_entry(&encode_entry(&m)).unwrap();
        assert_eq!(back.content_hash(), m.content_hash());
        assert_eq!(back.label(), m.label());
    }

    #[test]
    fn flipped_entry_byte_is_caught() {
        let m = module();
        let mut bytes = encode_entry(&m);
        let last = bytes.len() - 1;
        bytes[last] = (bytes[last] + 1) % 5;
        assert_eq!(decode_entry(&bytes).unwrap_err(), "content hash mismatch");
        assert!(decode_entry(&bytes[..10]).is_err());
    }

    #[test]
    fn version_changes_the_key() {
        let dir = tempfile::tempdir().unwrap();
        let a = Cache::with_version(dir.path(), "1.0.0").unwrap();
        let b = Cache::with_version(dir.path(), "1.0.1").unwrap();
        assert_ne!(a.key("specht:31^2", 5, 5, 0), b.key("specht:31^2", 5, 5, 0));
        a.put(&a.key("specht:31^2", 5, 5, 0), &module()).unwrap();
        assert_eq!(b.get(&b.key("specht:31^2", 5, 5, 0)), Lookup::Miss);
        assert!(matches!(a.get(&a.key("specht:31^2", 5, 5, 0)), Lookup::Hit(_)));
    }
}
