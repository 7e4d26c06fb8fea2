use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::families::clique_star;
use crate::graph::{BlockGraph, GraphDoc};
use crate::invariants::{alpha_min_graph, alpha_with_graph};

use super::ops::{apply_graph, legal_anchors};
use super::{Attachment, CharCertificate, CharError, OpDescriptor, OpKind, StarExtension};

pub const DEFAULT_MAX_CLIQUE: usize = 3;

/// Candidate operations tried per step before giving up.
pub const DEFAULT_RETRIES: usize = 200;

/// A random block graph with `α_min = r` and the certificate that built it.
/// The base vertex is 0.
pub fn generate_with_alphamin(
    r: usize,
    max_clique: usize,
    seed: u64,
) -> Result<(BlockGraph, CharCertificate), CharError> {
    if r == 0 {
        return Err(CharError::BadParameters("r must be at least 1".into()));
    }
    if max_clique < 2 {
        return Err(CharError::BadParameters("max clique size must be at least 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let blocks = rng.gen_range(2..=3);
    let sizes: Vec<usize> = (0..blocks).map(|_| rng.gen_range(2..=max_clique)).collect();
    let base = clique_star(&sizes);
    let v = 0;
    let mut cur = base.clone();
    let mut steps = Vec::new();
    for step in 1..r {
        let target = step + 1;
        let mut candidates = Vec::new();
        for kind in OpKind::ALL {
            for anchors in legal_anchors(&cur, v, kind)? {
                candidates.push((kind, anchors));
            }
        }
        let mut accepted = None;
        for _ in 0..DEFAULT_RETRIES {
            let Some((kind, anchors)) = candidates.choose(&mut rng) else {
                break;
            };
            let attachments: Vec<Attachment> = anchors
                .iter()
                .map(|&anchor| Attachment {
                    anchor,
                    size: rng.gen_range(2..=max_clique),
                })
                .collect();
            let k2s: Vec<usize> = (0..attachments.len()).filter(|&i| attachments[i].size == 2).collect();
            let star_extension = match k2s.choose(&mut rng) {
                Some(&attachment) if rng.gen_bool(0.3) => Some(StarExtension {
                    attachment,
                    size: rng.gen_range(2..=max_clique),
                }),
                _ => None,
            };
            let op = OpDescriptor {
                kind: *kind,
                attachments,
                star_extension,
            };
            let Ok(next) = apply_graph(&cur, v, &op) else {
                continue;
            };
            let (amin, _) = alpha_min_graph(&next)?;
            if amin == target && alpha_with_graph(&next, v) == target {
                accepted = Some((next, op));
                break;
            }
        }
        let (next, op) = accepted.ok_or(CharError::ExhaustedRetries {
            step,
            attempts: DEFAULT_RETRIES,
        })?;
        cur = BlockGraph::trusted(next);
        steps.push(op);
    }
    let cert = CharCertificate {
        base_vertex: v,
        base_graph: GraphDoc::from(&base),
        steps,
    };
    Ok((cur, cert))
}
