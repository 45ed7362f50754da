//! Chunked file encoding on top of a built code, plus the on-disk share
//! format: one RGL1 record followed by a fixed 16-byte trailer
//! ("RGLF", seed u64 LE, pad u32 LE) recording the key-stream seed and the
//! zero padding appended to fill the last bundle.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;
use regenlab::codes::{
    read_share_record, write_share_record, CodeSpec, NodeShare, RegenCode, ShareRecord,
};
use regenlab::gf256::Gf256;
use regenlab::{Error, Result};

pub const TRAILER_MAGIC: &[u8; 4] = b"RGLF";
pub const TRAILER_LEN: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Trailer {
    pub seed: u64,
    pub pad: u32,
}

pub fn write_share_file(spec: &CodeSpec, share: &NodeShare, trailer: Trailer) -> Result<Vec<u8>> {
    let rec = ShareRecord::from_share(spec, share)?;
    let mut bytes = write_share_record(&rec);
    bytes.extend_from_slice(TRAILER_MAGIC);
    bytes.extend_from_slice(&trailer.seed.to_le_bytes());
    bytes.extend_from_slice(&trailer.pad.to_le_bytes());
    Ok(bytes)
}

pub fn read_share_file(bytes: &[u8]) -> Result<(ShareRecord, Trailer)> {
    let (rec, used) = read_share_record(bytes)?;
    let rest = &bytes[used..];
    if rest.len() != TRAILER_LEN || &rest[..4] != TRAILER_MAGIC {
        return Err(Error::MalformedRecord("bad or missing trailer".into()));
    }
    let seed = u64::from_le_bytes(rest[4..12].try_into().unwrap());
    let pad = u32::from_le_bytes(rest[12..16].try_into().unwrap());
    Ok((rec, Trailer { seed, pad }))
}

/// Splits a file into bundles of total_message_len bytes (zero-padded at
/// the end), draws key symbols from a seeded stream, and encodes every
/// bundle. Returns one payload per node plus the pad length.
pub fn encode_file(code: &RegenCode, data: &[u8], seed: u64) -> Result<(Vec<Vec<u8>>, u32)> {
    let cap = code.total_message_len();
    if cap == 0 {
        return Err(Error::InvalidParams(
            "code carries no message symbols".into(),
        ));
    }
    let bundles = data.len().div_ceil(cap);
    let pad = (bundles * cap - data.len()) as u32;
    let n = code.n() as usize;
    let alpha = code.alpha();
    let source_dim = code.source_dim();
    let mut rng = ChaCha20Rng::seed_from_u64(seed);

    let mut payloads = vec![Vec::with_capacity(bundles * alpha); n];
    let mut source = vec![Gf256::ZERO; source_dim];
    for b in 0..bundles {
        // The source layout is message blocks in level order then keys, so
        // the bundle's bytes drop straight into the message prefix.
        let lo = b * cap;
        for (i, slot) in source[..cap].iter_mut().enumerate() {
            *slot = Gf256(data.get(lo + i).copied().unwrap_or(0));
        }
        for slot in source[cap..].iter_mut() {
            *slot = Gf256(rng.next_u32() as u8);
        }
        for (node_idx, payload) in payloads.iter_mut().enumerate() {
            let share = code.node_matrix(node_idx as u32 + 1)?.mul_vec(&source)?;
            payload.extend(share.iter().map(|g| g.raw()));
        }
    }
    Ok((payloads, pad))
}

/// Recovers the file bytes from the payloads of a node subset that
/// determines every message level.
pub fn decode_file(code: &RegenCode, shares: &[(u32, &[u8])], pad: u32) -> Result<Vec<u8>> {
    let cap = code.total_message_len();
    let alpha = code.alpha();
    let nodes: Vec<u32> = shares.iter().map(|&(i, _)| i).collect();
    for &(_, payload) in shares {
        if payload.len() % alpha != 0 || payload.len() != shares[0].1.len() {
            return Err(Error::SizeMismatch("ragged share payloads".into()));
        }
    }
    let bundles = shares[0].1.len() / alpha;
    let levels: Vec<u32> = code.spec().levels.keys().copied().collect();
    let decoders = levels
        .iter()
        .map(|&j| code.recovery_matrix(j, &nodes))
        .collect::<Result<Vec<_>>>()?;

    let mut out = Vec::with_capacity(bundles * cap);
    let mut stacked = vec![Gf256::ZERO; shares.len() * alpha];
    for b in 0..bundles {
        for (s, &(_, payload)) in shares.iter().enumerate() {
            for t in 0..alpha {
                stacked[s * alpha + t] = Gf256(payload[b * alpha + t]);
            }
        }
        for dec in &decoders {
            let block = dec.mul_vec(&stacked)?;
            out.extend(block.iter().map(|g| g.raw()));
        }
    }
    let total = bundles * cap;
    if (pad as usize) > total {
        return Err(Error::MalformedRecord("pad exceeds content".into()));
    }
    out.truncate(total - pad as usize);
    Ok(out)
}

/// Rebuilds a failed node's payload from d helper payloads.
pub fn regenerate_payload(
    code: &RegenCode,
    helpers: &[(u32, &[u8])],
    target: u32,
) -> Result<Vec<u8>> {
    let alpha = code.alpha();
    let beta = code.beta();
    let helper_ids: Vec<u32> = helpers.iter().map(|&(i, _)| i).collect();
    let repair = code.repair_matrix(target)?;
    let regen = code.regen_matrix(target, &helper_ids)?;
    let bundles = helpers.first().map(|&(_, p)| p.len() / alpha).unwrap_or(0);
    for &(_, payload) in helpers {
        if payload.len() != bundles * alpha {
            return Err(Error::SizeMismatch("ragged helper payloads".into()));
        }
    }
    let mut out = Vec::with_capacity(bundles * alpha);
    let mut share_buf = vec![Gf256::ZERO; alpha];
    let mut packets = vec![Gf256::ZERO; helpers.len() * beta];
    for b in 0..bundles {
        for (h, &(_, payload)) in helpers.iter().enumerate() {
            for t in 0..alpha {
                share_buf[t] = Gf256(payload[b * alpha + t]);
            }
            let pkt = repair.mul_vec(&share_buf)?;
            packets[h * beta..(h + 1) * beta].copy_from_slice(&pkt);
        }
        let rebuilt = regen.mul_vec(&packets)?;
        out.extend(rebuilt.iter().map(|g| g.raw()));
    }
    Ok(out)
}
