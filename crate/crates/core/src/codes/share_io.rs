//! Binary node-share records.
//!
//! Layout, all integers little-endian:
//!
//! ```text
//! "RGL1"            4 bytes magic
//! n, d, l           u16 each
//! level count       u16
//! per level         j: u16, B_j: u16, beta_j: u16
//! field id          u8 (0 = GF(256) / 0x11D)
//! node index        u16
//! payload length    u32
//! payload           raw bytes
//! ```
//!
//! Round-trips are bit-exact: `write(read(bytes)) == bytes` for any record
//! this module accepts.

use crate::codes::{CodeSpec, NodeShare};
use crate::error::{Error, Result};
use crate::gf256::Gf256;

pub const SHARE_MAGIC: &[u8; 4] = b"RGL1";
pub const FIELD_ID_GF256: u8 = 0;

/// One node share with enough header context to rebuild the code spec.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShareRecord {
    pub n: u16,
    pub d: u16,
    pub ell: u16,
    /// (level j, message size B_j, beta_j) in header order.
    pub levels: Vec<(u16, u16, u16)>,
    pub field_id: u8,
    pub node_index: u16,
    pub payload: Vec<u8>,
}

impl ShareRecord {
    pub fn from_share(spec: &CodeSpec, share: &NodeShare) -> Result<Self> {
        let levels = spec
            .levels
            .iter()
            .map(|(&j, lv)| {
                let b = u16::try_from(lv.message_len)
                    .map_err(|_| Error::InvalidParams("level message size exceeds u16".into()))?;
                let beta = u16::try_from(lv.beta)
                    .map_err(|_| Error::InvalidParams("level beta exceeds u16".into()))?;
                Ok((j as u16, b, beta))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            n: spec.n as u16,
            d: spec.d as u16,
            ell: spec.ell as u16,
            levels,
            field_id: FIELD_ID_GF256,
            node_index: share.node_index as u16,
            payload: share.payload.iter().map(|g| g.raw()).collect(),
        })
    }

    pub fn to_share(&self) -> NodeShare {
        NodeShare {
            node_index: self.node_index as u32,
            payload: self.payload.iter().map(|&b| Gf256(b)).collect(),
        }
    }

    /// Checks the header against an expected spec.
    pub fn matches_spec(&self, spec: &CodeSpec) -> bool {
        self.n as u32 == spec.n
            && self.d as u32 == spec.d
            && self.ell as u32 == spec.ell
            && self.field_id == FIELD_ID_GF256
            && self.levels.len() == spec.levels.len()
            && self
                .levels
                .iter()
                .zip(spec.levels.iter())
                .all(|(&(j, b, beta), (&sj, lv))| {
                    j as u32 == sj && b as usize == lv.message_len && beta as usize == lv.beta
                })
    }
}

pub fn write_share_record(rec: &ShareRecord) -> Vec<u8> {
    let mut out = Vec::with_capacity(4 + 8 + rec.levels.len() * 6 + 7 + rec.payload.len());
    out.extend_from_slice(SHARE_MAGIC);
    for v in [rec.n, rec.d, rec.ell, rec.levels.len() as u16] {
        out.extend_from_slice(&v.to_le_bytes());
    }
    for &(j, b, beta) in &rec.levels {
        out.extend_from_slice(&j.to_le_bytes());
        out.extend_from_slice(&b.to_le_bytes());
        out.extend_from_slice(&beta.to_le_bytes());
    }
    out.push(rec.field_id);
    out.extend_from_slice(&rec.node_index.to_le_bytes());
    out.extend_from_slice(&(rec.payload.len() as u32).to_le_bytes());
    out.extend_from_slice(&rec.payload);
    out
}

/// Parses a record from the front of `bytes`; returns it with the number
/// of bytes consumed.
pub fn read_share_record(bytes: &[u8]) -> Result<(ShareRecord, usize)> {
    let mut pos = 0usize;
    let take = |pos: &mut usize, len: usize| -> Result<&[u8]> {
        if *pos + len > bytes.len() {
            return Err(Error::MalformedRecord("truncated".into()));
        }
        let s = &bytes[*pos..*pos + len];
        *pos += len;
        Ok(s)
    };
    let magic = take(&mut pos, 4)?;
    if magic != SHARE_MAGIC {
        return Err(Error::MalformedRecord("bad magic".into()));
    }
    let u16le = |pos: &mut usize| -> Result<u16> {
        let s = take(pos, 2)?;
        Ok(u16::from_le_bytes([s[0], s[1]]))
    };
    let n = u16le(&mut pos)?;
    let d = u16le(&mut pos)?;
    let ell = u16le(&mut pos)?;
    let level_count = u16le(&mut pos)? as usize;
    let mut levels = Vec::with_capacity(level_count);
    for _ in 0..level_count {
        let j = u16le(&mut pos)?;
        let b = u16le(&mut pos)?;
        let beta = u16le(&mut pos)?;
        levels.push((j, b, beta));
    }
    let field_id = take(&mut pos, 1)?[0];
    if field_id != FIELD_ID_GF256 {
        return Err(Error::MalformedRecord(format!(
            "unknown field id {field_id}"
        )));
    }
    let node_index = u16le(&mut pos)?;
    let len_bytes = take(&mut pos, 4)?;
    let payload_len = u32::from_le_bytes(len_bytes.try_into().unwrap()) as usize;
    let payload = take(&mut pos, payload_len)?.to_vec();
    Ok((
        ShareRecord {
            n,
            d,
            ell,
            levels,
            field_id,
            node_index,
            payload,
        },
        pos,
    ))
}
