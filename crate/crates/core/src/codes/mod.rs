//! Concrete regenerating-code constructions over GF(256).
//!
//! Every code here is a product-matrix code or a concatenation of them.
//! One unit of a level-k code is a symmetric d x d message matrix
//!
//! ```text
//!     M = [ S  T ]      S: k x k symmetric,  T: k x (d-k),
//!         [ T' 0 ]      bottom-right (d-k) x (d-k) block zero,
//! ```
//!
//! node i stores psi_i' * M where psi_i is row i of an n x d Vandermonde
//! matrix, and a helper h repairs node f by sending the single symbol
//! psi_h' * M * psi_f. Because M is symmetric, the d packets a failed node
//! collects stack to an invertible Vandermonde system whose solution *is*
//! the lost share, which gives exact repair with one symbol per helper.
//!
//! Repair secrecy is obtained by filling every matrix entry whose smaller
//! coordinate is below the eavesdropping level with uniform key symbols;
//! the remaining entries carry message symbols. The construction is not
//! trusted: the entropy oracle certifies the secrecy of every built
//! instance.
//!
//! A multi-level code is the separate-coding composite: one secure code
//! per message level, shares and repair packets concatenated level by
//! level, unit by unit.

mod share_io;

pub use share_io::{read_share_record, write_share_record, ShareRecord, FIELD_ID_GF256};

use std::collections::BTreeMap;
use std::ops::Range;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::bounds::{t_coeff, MessageProfile, RatePoint};
use crate::entropy::VarName;
use crate::error::{Error, Result};
use crate::gf256::Gf256;
use crate::matrix::{FieldMatrix, RowSpace};
use crate::ratio;

/// Symbol counts for one message level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LevelSpec {
    /// Message size B_j in symbols.
    pub message_len: usize,
    /// Repair-bandwidth units beta_j devoted to this level.
    pub beta: usize,
}

/// The parameter tuple defining a code instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSpec {
    pub n: u32,
    pub d: u32,
    pub ell: u32,
    /// Levels with nonzero message size, keyed by recovery level j.
    pub levels: BTreeMap<u32, LevelSpec>,
}

impl CodeSpec {
    pub fn validate(&self) -> Result<()> {
        if self.d == 0 || self.d >= self.n {
            return Err(Error::InvalidParams(format!(
                "need 0 < d < n, got n={} d={}",
                self.n, self.d
            )));
        }
        if self.n > 255 {
            return Err(Error::InvalidParams(
                "node count exceeds field order - 1".into(),
            ));
        }
        if self.levels.is_empty() {
            return Err(Error::InvalidParams("no levels".into()));
        }
        if let Some(min_level) = self
            .levels
            .iter()
            .find(|(_, lv)| lv.message_len > 0)
            .map(|(&j, _)| j)
        {
            if self.ell >= min_level {
                return Err(Error::SecrecyImpossible);
            }
        }
        for (&j, lv) in &self.levels {
            if j > self.d {
                return Err(Error::InvalidParams(format!(
                    "level {j} exceeds repair degree {}",
                    self.d
                )));
            }
            if lv.beta == 0 {
                return Err(Error::InvalidParams(format!("level {j} has beta = 0")));
            }
            // A level at j = l has T = 0 and so carries keys only; anything
            // below l is rejected by the coefficient itself.
            let t = t_coeff(self.d, j, self.ell)? as usize;
            if lv.message_len != t * lv.beta {
                return Err(Error::InvalidParams(format!(
                    "level {j}: message size {} != T(d,j,l) * beta = {}",
                    lv.message_len,
                    t * lv.beta
                )));
            }
        }
        Ok(())
    }

    /// Node capacity in symbols: d symbols per unit.
    pub fn alpha(&self) -> usize {
        self.d as usize * self.total_beta()
    }

    /// Per-helper repair bandwidth in symbols: one per unit.
    pub fn total_beta(&self) -> usize {
        self.levels.values().map(|l| l.beta).sum()
    }

    pub fn total_message_len(&self) -> usize {
        self.levels.values().map(|l| l.message_len).sum()
    }

    /// Total key symbols: T(d, l, 0) per unit.
    pub fn key_len(&self) -> Result<usize> {
        let per_unit = t_coeff(self.d, self.ell, 0)? as usize;
        Ok(per_unit * self.total_beta())
    }
}

/// One storage node's content.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeShare {
    /// 1-based node index.
    pub node_index: u32,
    pub payload: Vec<Gf256>,
}

/// What one helper sends toward one failed node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepairPacket {
    pub helper: u32,
    pub target: u32,
    pub payload: Vec<Gf256>,
}

/// The symbols to encode: one block per message level plus key material.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MessageBundle {
    pub levels: BTreeMap<u32, Vec<Gf256>>,
    pub key: Vec<Gf256>,
}

impl MessageBundle {
    pub fn zero_for(code: &RegenCode) -> Self {
        let levels = code
            .spec
            .levels
            .iter()
            .map(|(&j, lv)| (j, vec![Gf256::ZERO; lv.message_len]))
            .collect();
        Self {
            levels,
            key: vec![Gf256::ZERO; code.key_len()],
        }
    }

    /// Elementwise sum, for linearity checks.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.levels.keys().ne(other.levels.keys()) || self.key.len() != other.key.len() {
            return Err(Error::SizeMismatch("bundle shapes differ".into()));
        }
        let levels = self
            .levels
            .iter()
            .map(|(&j, block)| {
                let ob = &other.levels[&j];
                (j, block.iter().zip(ob).map(|(&a, &b)| a + b).collect())
            })
            .collect();
        let key = self
            .key
            .iter()
            .zip(&other.key)
            .map(|(&a, &b)| a + b)
            .collect();
        Ok(Self { levels, key })
    }
}

/// Per-unit placement of source coordinates into the symmetric message
/// matrix: `coords[r * d + c]` is the source index backing entry (r, c),
/// `None` inside the zero block.
struct UnitLayout {
    coords: Vec<Option<usize>>,
}

struct LevelLayout {
    /// Offset of this level's block within a node payload.
    share_offset: usize,
    units: Vec<UnitLayout>,
}

/// A fully built code instance: immutable, all operations pure.
pub struct RegenCode {
    spec: CodeSpec,
    /// Row i-1 is psi_i, the evaluation row of node i.
    psi: FieldMatrix,
    source_dim: usize,
    message_ranges: BTreeMap<u32, Range<usize>>,
    key_range: Range<usize>,
    levels: Vec<LevelLayout>,
    /// E_i, the alpha x source_dim encoding map of node i (index i-1).
    node_matrices: Vec<FieldMatrix>,
}

impl RegenCode {
    /// Plain product-matrix MBR code: any k nodes recover the message,
    /// message size T(d, k, 0) * beta.
    pub fn build_pm_mbr(n: u32, k: u32, d: u32, beta: usize) -> Result<Self> {
        Self::build_src(n, k, d, 0, beta)
    }

    /// Key-padded secure code: message size T(d, k, l) * beta, key size
    /// T(d, l, 0) * beta. With l = 0 this is exactly the plain MBR code.
    pub fn build_src(n: u32, k: u32, d: u32, ell: u32, beta: usize) -> Result<Self> {
        if ell >= k {
            return Err(Error::SecrecyImpossible);
        }
        if k > d {
            return Err(Error::InvalidParams(format!(
                "recovery level {k} exceeds repair degree {d}"
            )));
        }
        let b = t_coeff(d, k, ell)? as usize * beta;
        let mut levels = BTreeMap::new();
        levels.insert(
            k,
            LevelSpec {
                message_len: b,
                beta,
            },
        );
        Self::build(CodeSpec { n, d, ell, levels })
    }

    /// Degenerate instance that stores key material only: the level sits at
    /// the eavesdropping index, where the per-unit message size is zero.
    /// Useful as a baseline for checks whose message terms should vanish.
    pub fn build_keys_only(n: u32, d: u32, ell: u32, beta: usize) -> Result<Self> {
        if ell == 0 {
            return Err(Error::InvalidParams(
                "a keys-only instance needs l >= 1 to carry anything".into(),
            ));
        }
        let mut levels = BTreeMap::new();
        levels.insert(
            ell,
            LevelSpec {
                message_len: 0,
                beta,
            },
        );
        Self::build(CodeSpec { n, d, ell, levels })
    }

    /// Multi-level separate-coding composite with explicit per-level unit
    /// counts.
    pub fn build_multilevel(
        n: u32,
        d: u32,
        ell: u32,
        betas: &BTreeMap<u32, usize>,
    ) -> Result<Self> {
        let mut levels = BTreeMap::new();
        for (&j, &beta) in betas {
            let b = t_coeff(d, j, ell)? as usize * beta;
            levels.insert(
                j,
                LevelSpec {
                    message_len: b,
                    beta,
                },
            );
        }
        Self::build(CodeSpec { n, d, ell, levels })
    }

    /// Separate-coding composite achieving the corner point of a rational
    /// message profile exactly.
    ///
    /// The profile weights are scaled by the smallest L that makes every
    /// beta_j = L * weight_j / T(d, j, l) a nonnegative integer; the
    /// normalized rates of the built code are then independent of L.
    pub fn build_mdcsr_separate(
        n: u32,
        d: u32,
        ell: u32,
        profile: &MessageProfile,
    ) -> Result<Self> {
        if profile.d() != d || profile.ell() != ell {
            return Err(Error::InvalidParams("profile/parameter mismatch".into()));
        }
        let active = profile.active_levels();
        if active.is_empty() {
            return Err(Error::InvalidParams("profile has no nonzero weight".into()));
        }
        let mut scale = BigInt::from(1u32);
        for &j in &active {
            let t = BigInt::from(t_coeff(d, j, ell)?);
            let w = profile.weight(j);
            // beta_j = L * p / (q * T) integral  <=>  (q*T / gcd(q*T, p)) | L
            let denom = w.denom() * &t;
            let g = denom.gcd(w.numer());
            scale = scale.lcm(&(denom / g));
        }
        let scale_r = BigRational::from_integer(scale);
        let mut betas = BTreeMap::new();
        for &j in &active {
            let t = t_coeff(d, j, ell)?;
            let beta = (&scale_r * profile.weight(j) / ratio::int(t))
                .to_integer()
                .to_usize()
                .ok_or_else(|| Error::InvalidParams("profile scale overflow".into()))?;
            betas.insert(j, beta);
        }
        Self::build_multilevel(n, d, ell, &betas)
    }

    /// Builds the encoding maps for a validated spec.
    pub fn build(spec: CodeSpec) -> Result<Self> {
        spec.validate()?;
        let n = spec.n as usize;
        let d = spec.d as usize;
        let ell = spec.ell as usize;

        let points: Vec<Gf256> = (1..=n as u8).map(Gf256).collect();
        let psi = FieldMatrix::vandermonde(n, d, &points)?;

        // Source layout: message blocks in level order, then all keys.
        let total_message = spec.total_message_len();
        let mut message_ranges = BTreeMap::new();
        let mut next = 0usize;
        for (&j, lv) in &spec.levels {
            message_ranges.insert(j, next..next + lv.message_len);
            next += lv.message_len;
        }
        debug_assert_eq!(next, total_message);
        let mut key_cursor = total_message;

        let mut levels = Vec::new();
        let mut share_offset = 0usize;
        for (&j, lv) in &spec.levels {
            let k = j as usize;
            let msg_base = message_ranges[&j].start;
            let mut msg_cursor = msg_base;
            let mut units = Vec::with_capacity(lv.beta);
            for _ in 0..lv.beta {
                let mut coords = vec![None; d * d];
                // Upper triangle, rows below k are the nonzero structure;
                // rows below l are keys, the rest messages.
                for r in 0..k {
                    for c in r..d {
                        let idx = if r < ell {
                            let i = key_cursor;
                            key_cursor += 1;
                            i
                        } else {
                            let i = msg_cursor;
                            msg_cursor += 1;
                            i
                        };
                        coords[r * d + c] = Some(idx);
                        coords[c * d + r] = Some(idx);
                    }
                }
                units.push(UnitLayout { coords });
            }
            debug_assert_eq!(msg_cursor, msg_base + lv.message_len);
            levels.push(LevelLayout {
                share_offset,
                units,
            });
            share_offset += lv.beta * d;
        }
        let source_dim = key_cursor;
        let key_range = total_message..source_dim;
        let alpha = spec.alpha();
        debug_assert_eq!(share_offset, alpha);

        // Node encoding maps: share symbol (level, unit, t) is
        // sum_r psi_i[r] * M[r][t].
        let mut node_matrices = Vec::with_capacity(n);
        for node in 0..n {
            let mut e = FieldMatrix::zero(alpha, source_dim);
            for level in &levels {
                for (u, unit) in level.units.iter().enumerate() {
                    let base = level.share_offset + u * d;
                    for t in 0..d {
                        for r in 0..d {
                            if let Some(src) = unit.coords[r * d + t] {
                                e[(base + t, src)] += psi[(node, r)];
                            }
                        }
                    }
                }
            }
            node_matrices.push(e);
        }

        Ok(Self {
            spec,
            psi,
            source_dim,
            message_ranges,
            key_range,
            levels,
            node_matrices,
        })
    }

    pub fn spec(&self) -> &CodeSpec {
        &self.spec
    }

    pub fn n(&self) -> u32 {
        self.spec.n
    }

    pub fn d(&self) -> u32 {
        self.spec.d
    }

    pub fn ell(&self) -> u32 {
        self.spec.ell
    }

    pub fn alpha(&self) -> usize {
        self.spec.alpha()
    }

    pub fn beta(&self) -> usize {
        self.spec.total_beta()
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn key_len(&self) -> usize {
        self.key_range.len()
    }

    pub fn total_message_len(&self) -> usize {
        self.spec.total_message_len()
    }

    pub fn message_range(&self, level: u32) -> Option<Range<usize>> {
        self.message_ranges.get(&level).cloned()
    }

    pub fn key_range(&self) -> Range<usize> {
        self.key_range.clone()
    }

    /// The encoding map of one node, as a matrix over the source vector.
    pub fn node_matrix(&self, node: u32) -> Result<&FieldMatrix> {
        self.check_node(node)?;
        Ok(&self.node_matrices[(node - 1) as usize])
    }

    /// The map from a helper's share to the packet it sends toward
    /// `target`. Depends on the target only; the helper's identity enters
    /// through its share.
    pub fn repair_matrix(&self, target: u32) -> Result<FieldMatrix> {
        self.check_node(target)?;
        let d = self.spec.d as usize;
        let alpha = self.alpha();
        let mut m = FieldMatrix::zero(self.beta(), alpha);
        let mut pkt = 0usize;
        for level in &self.levels {
            for u in 0..level.units.len() {
                let base = level.share_offset + u * d;
                for t in 0..d {
                    m[(pkt, base + t)] = self.psi[((target - 1) as usize, t)];
                }
                pkt += 1;
            }
        }
        Ok(m)
    }

    /// The packet-space encoding of S[helper -> target] over the source
    /// vector.
    pub fn packet_matrix(&self, helper: u32, target: u32) -> Result<FieldMatrix> {
        if helper == target {
            return Err(Error::InvalidParams("helper equals target".into()));
        }
        self.repair_matrix(target)?.mul(self.node_matrix(helper)?)
    }

    fn check_node(&self, node: u32) -> Result<()> {
        if node == 0 || node > self.spec.n {
            return Err(Error::InvalidParams(format!(
                "node {node} outside [1 : {}]",
                self.spec.n
            )));
        }
        Ok(())
    }

    /// Assembles the source vector of a bundle: message blocks in level
    /// order, then keys.
    pub fn source_vector(&self, bundle: &MessageBundle) -> Result<Vec<Gf256>> {
        if bundle.levels.keys().ne(self.spec.levels.keys()) {
            return Err(Error::SizeMismatch(
                "bundle levels differ from code levels".into(),
            ));
        }
        let mut u = vec![Gf256::ZERO; self.source_dim];
        for (&j, block) in &bundle.levels {
            let range = self.message_ranges[&j].clone();
            if block.len() != range.len() {
                return Err(Error::SizeMismatch(format!(
                    "level {j}: {} symbols, expected {}",
                    block.len(),
                    range.len()
                )));
            }
            u[range].copy_from_slice(block);
        }
        if bundle.key.len() != self.key_range.len() {
            return Err(Error::SizeMismatch(format!(
                "key: {} symbols, expected {}",
                bundle.key.len(),
                self.key_range.len()
            )));
        }
        u[self.key_range.clone()].copy_from_slice(&bundle.key);
        Ok(u)
    }

    /// Encodes a bundle into all n node shares.
    pub fn encode(&self, bundle: &MessageBundle) -> Result<Vec<NodeShare>> {
        let u = self.source_vector(bundle)?;
        (1..=self.spec.n)
            .map(|node| {
                Ok(NodeShare {
                    node_index: node,
                    payload: self.node_matrices[(node - 1) as usize].mul_vec(&u)?,
                })
            })
            .collect()
    }

    /// Recovers the level-j message block from shares of distinct nodes.
    ///
    /// Succeeds whenever the shares determine the block (any j of them do);
    /// reports `InsufficientShares` when they do not and `CorruptShares`
    /// when they are mutually inconsistent.
    pub fn recover(&self, level: u32, shares: &[NodeShare]) -> Result<Vec<Gf256>> {
        let range = self
            .message_ranges
            .get(&level)
            .cloned()
            .ok_or_else(|| Error::InvalidParams(format!("no message level {level}")))?;
        if shares.is_empty() {
            return Err(Error::InsufficientShares("no shares given".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for s in shares {
            self.check_node(s.node_index)?;
            if !seen.insert(s.node_index) {
                return Err(Error::InvalidParams(format!(
                    "duplicate node {}",
                    s.node_index
                )));
            }
            if s.payload.len() != self.alpha() {
                return Err(Error::SizeMismatch(format!(
                    "node {} share has {} symbols, expected {}",
                    s.node_index,
                    s.payload.len(),
                    self.alpha()
                )));
            }
        }
        let mats: Vec<&FieldMatrix> = shares
            .iter()
            .map(|s| &self.node_matrices[(s.node_index - 1) as usize])
            .collect();
        let g = FieldMatrix::stack(mats.iter().copied())?;
        let space = RowSpace::new(&g);
        let mut unit = vec![Gf256::ZERO; self.source_dim];
        for c in range.clone() {
            unit[c] = Gf256::ONE;
            let determined = space.contains(&unit);
            unit[c] = Gf256::ZERO;
            if !determined {
                return Err(Error::InsufficientShares(format!(
                    "{} shares do not determine level {level}",
                    shares.len()
                )));
            }
        }
        let mut obs = FieldMatrix::zero(g.rows(), 1);
        let mut row = 0usize;
        for s in shares {
            for &sym in &s.payload {
                obs[(row, 0)] = sym;
                row += 1;
            }
        }
        let x = g.solve(&obs).map_err(|e| match e {
            Error::NoSolution => Error::CorruptShares,
            other => other,
        })?;
        Ok(range.map(|c| x[(c, 0)]).collect())
    }

    /// Bulk-decode matrix: maps the stacked payloads of the given nodes to
    /// the level-j message block. Fails when those nodes do not determine
    /// the block.
    pub fn recovery_matrix(&self, level: u32, nodes: &[u32]) -> Result<FieldMatrix> {
        let range = self
            .message_ranges
            .get(&level)
            .cloned()
            .ok_or_else(|| Error::InvalidParams(format!("no message level {level}")))?;
        let mats: Vec<&FieldMatrix> = nodes
            .iter()
            .map(|&i| self.node_matrix(i))
            .collect::<Result<_>>()?;
        let g = FieldMatrix::stack(mats.iter().copied())?;
        // Want D with D * G = selector of the message coordinates, i.e.
        // G' * D' = selector'.
        let rows = g.rows();
        let mut gt = FieldMatrix::zero(g.cols(), rows);
        for i in 0..rows {
            for j in 0..g.cols() {
                gt[(j, i)] = g[(i, j)];
            }
        }
        let mut sel_t = FieldMatrix::zero(self.source_dim, range.len());
        for (out, c) in range.enumerate() {
            sel_t[(c, out)] = Gf256::ONE;
        }
        let dt = gt.solve(&sel_t).map_err(|e| match e {
            Error::NoSolution => {
                Error::InsufficientShares(format!("nodes {nodes:?} do not determine level {level}"))
            }
            other => other,
        })?;
        let mut dm = FieldMatrix::zero(sel_t.cols(), rows);
        for i in 0..rows {
            for j in 0..sel_t.cols() {
                dm[(j, i)] = dt[(i, j)];
            }
        }
        Ok(dm)
    }

    /// Computes the packet a helper sends toward a failed node.
    pub fn repair_extract(&self, helper_share: &NodeShare, target: u32) -> Result<RepairPacket> {
        if helper_share.node_index == target {
            return Err(Error::InvalidParams("helper equals target".into()));
        }
        self.check_node(helper_share.node_index)?;
        self.check_node(target)?;
        if helper_share.payload.len() != self.alpha() {
            return Err(Error::SizeMismatch("share length".into()));
        }
        let payload = self.repair_matrix(target)?.mul_vec(&helper_share.payload)?;
        Ok(RepairPacket {
            helper: helper_share.node_index,
            target,
            payload,
        })
    }

    /// Rebuilds a node's exact share from d packets sent by distinct
    /// helpers.
    pub fn regenerate(&self, target: u32, packets: &[RepairPacket]) -> Result<NodeShare> {
        self.check_node(target)?;
        let d = self.spec.d as usize;
        if packets.len() != d {
            return Err(Error::InvalidParams(format!(
                "need exactly {d} packets, got {}",
                packets.len()
            )));
        }
        let mut helpers = Vec::with_capacity(d);
        for p in packets {
            if p.target != target {
                return Err(Error::InvalidParams(format!(
                    "packet addressed to {} not {target}",
                    p.target
                )));
            }
            self.check_node(p.helper)?;
            if p.helper == target || helpers.contains(&p.helper) {
                return Err(Error::InvalidParams(
                    "helpers must be distinct survivors".into(),
                ));
            }
            if p.payload.len() != self.beta() {
                return Err(Error::SizeMismatch("packet length".into()));
            }
            helpers.push(p.helper);
        }
        let regen = self.regen_matrix(target, &helpers)?;
        let mut stacked = Vec::with_capacity(d * self.beta());
        for p in packets {
            stacked.extend_from_slice(&p.payload);
        }
        Ok(NodeShare {
            node_index: target,
            payload: regen.mul_vec(&stacked)?,
        })
    }

    /// Bulk-repair matrix: maps the packets of the given helpers (stacked
    /// in order, beta symbols each) to the target's exact share.
    pub fn regen_matrix(&self, target: u32, helpers: &[u32]) -> Result<FieldMatrix> {
        self.check_node(target)?;
        let d = self.spec.d as usize;
        if helpers.len() != d {
            return Err(Error::InvalidParams(format!(
                "need exactly {d} helpers, got {}",
                helpers.len()
            )));
        }
        let rows: Vec<usize> = helpers.iter().map(|&h| (h - 1) as usize).collect();
        let sub = self.psi.select_rows(&rows);
        // Per unit the packets are Psi_helpers * (M psi_f); inverting once
        // recovers M psi_f, which by symmetry of M is the lost share block.
        let inv = sub.solve(&FieldMatrix::identity(d))?;
        let beta = self.beta();
        let mut m = FieldMatrix::zero(self.alpha(), d * beta);
        let mut pkt = 0usize;
        for level in &self.levels {
            for u in 0..level.units.len() {
                let base = level.share_offset + u * (self.spec.d as usize);
                for t in 0..d {
                    for (h_idx, _) in helpers.iter().enumerate() {
                        m[(base + t, h_idx * beta + pkt)] = inv[(t, h_idx)];
                    }
                }
                pkt += 1;
            }
        }
        Ok(m)
    }

    /// The full collection of repair traffic an eavesdropper tapping the
    /// given nodes can observe, as entropy-oracle variables. Packets do not
    /// depend on the repair group, so this is every ordered pair into the
    /// tapped set.
    pub fn eavesdropper_view(&self, eaves: &[u32]) -> Result<Vec<VarName>> {
        if eaves.len() != self.spec.ell as usize {
            return Err(Error::InvalidParams(format!(
                "eavesdropped set has {} nodes, expected l = {}",
                eaves.len(),
                self.spec.ell
            )));
        }
        let mut seen = std::collections::BTreeSet::new();
        for &f in eaves {
            self.check_node(f)?;
            if !seen.insert(f) {
                return Err(Error::InvalidParams(format!("duplicate node {f}")));
            }
        }
        let mut vars = Vec::new();
        for &f in eaves {
            for h in 1..=self.spec.n {
                if h != f {
                    vars.push(VarName::Repair(h, f));
                }
            }
        }
        Ok(vars)
    }

    /// The code's normalized (alpha, beta) pair, exact.
    pub fn normalized_point(&self) -> RatePoint {
        let b = ratio::int(self.total_message_len() as i64);
        RatePoint::new(
            ratio::int(self.alpha() as i64) / b.clone(),
            ratio::int(self.beta() as i64) / b,
        )
    }

    /// The code's per-level normalized message weights.
    pub fn message_profile(&self) -> Result<MessageProfile> {
        let total = self.total_message_len() as i64;
        let weights = self
            .spec
            .levels
            .iter()
            .map(|(&j, lv)| (j, ratio::frac(lv.message_len as i64, total)))
            .collect();
        MessageProfile::new(self.spec.d, self.spec.ell, weights)
    }
}
