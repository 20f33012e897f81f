#include "schurcert/schur_first.hpp"

#include <string>
#include <unordered_map>

#include "schurcert/linalg.hpp"

namespace schurcert {

namespace {

struct Units {
  DenseMatrix f11, f12, f21, f22;
  std::vector<int> dims1, dims2;
};

Units split_units(const BlockMatrix& b) {
  const BlockPartition p = partition_first(b);
  return {flatten(p.b11), flatten(p.b12), flatten(p.b21), flatten(p.b22),
          p.b11.row_dims(), p.b22.row_dims()};
}

BlockMatrix rebuild(DenseMatrix m, const std::vector<int>& dims, bool resym,
                    const Tolerances& tol) {
  if (resym) m = symmetrize(m);
  return assemble(m, dims, tol);
}

// Complement of the diagonal unit opposite to `keep`; keep=1 yields
// D^1_2 = B^11 - B^12 (B^22)^-1 B^21, keep=2 yields D^2_1.
BlockMatrix complement_unit(const BlockMatrix& b, const Units& u, int keep,
                            const Tolerances& tol, const std::string& chain_ctx) {
  const bool resym = b.self_adjoint();
  if (keep == 1) {
    const DenseMatrix inv22 = invert(u.f22, tol, chain_ctx.empty() ? "B22" : "B22 of " + chain_ctx);
    return rebuild(subtract(u.f11, multiply(u.f12, multiply(inv22, u.f21))), u.dims1, resym, tol);
  }
  const DenseMatrix inv11 = invert(u.f11, tol, chain_ctx.empty() ? "B11" : "B11 of " + chain_ctx);
  return rebuild(subtract(u.f22, multiply(u.f21, multiply(inv11, u.f12))), u.dims2, resym, tol);
}

}  // namespace

BlockMatrix schur_first(const BlockMatrix& b, int i, int j, const Tolerances& tol) {
  tol.validate();
  if ((i != 1 && i != 2) || (j != 1 && j != 2)) {
    throw Error("schur_first: indices must be 1 or 2");
  }
  const Units u = split_units(b);
  if (i == j) {
    const BlockPartition p = partition_first(b);
    return materialize(i == 1 ? p.b11 : p.b22, tol);
  }
  return complement_unit(b, u, i, tol, "");
}

namespace {

struct PdContext {
  const Tolerances& tol;
  PdMode mode;
  long leaf_count = 0;
  bool any_false = false;
  bool any_error = false;
  std::optional<std::string> first_failure;

  void record_failure(const std::string& chain) {
    if (!first_failure) first_failure = chain;
    any_false = true;
  }
};

CertNode eval_pd_node(const BlockMatrix& b, const SchurChain& chain, PdContext& ctx) {
  CertNode node;
  node.chain = chain.str();
  node.order = b.order();

  if (b.order() == 1) {
    ++ctx.leaf_count;
    try {
      const LeafCheck lc = is_pd_leaf(b.block(0, 0), ctx.tol);
      node.lambda_min = lc.lambda_min;
      node.verdict = lc.verdict;
      if (!lc.verdict) ctx.record_failure(node.chain);
    } catch (const Error& e) {
      node.verdict = false;
      node.note = e.what();
      ctx.any_error = true;
    }
    return node;
  }

  const Units u = split_units(b);
  const BlockPartition p = partition_first(b);
  bool all_ok = true;

  // canonical child order: (1,1), (2,2), (2,1), (1,2)
  static constexpr std::pair<int, int> kOrder[] = {{1, 1}, {2, 2}, {2, 1}, {1, 2}};
  for (const auto& [ci, cj] : kOrder) {
    if (ctx.mode == PdMode::EarlyExit && !all_ok) break;
    const SchurChain child_chain = chain.extended(ci, cj);
    if (ci == cj) {
      const BlockMatrix sub = materialize(ci == 1 ? p.b11 : p.b22, ctx.tol);
      CertNode child = eval_pd_node(sub, child_chain, ctx);
      all_ok = all_ok && child.verdict;
      node.children.push_back(std::move(child));
      continue;
    }
    try {
      const BlockMatrix sub = complement_unit(b, u, ci, ctx.tol, chain.pretty());
      CertNode child = eval_pd_node(sub, child_chain, ctx);
      all_ok = all_ok && child.verdict;
      node.children.push_back(std::move(child));
    } catch (const NumericallySingular& e) {
      // A diagonal unit without an inverse cannot be positive definite:
      // the verdict is settled here, the subtree is not expanded.
      CertNode child;
      child.chain = child_chain.str();
      child.order = static_cast<int>((ci == 1 ? u.dims1 : u.dims2).size());
      child.verdict = false;
      child.singular = true;
      child.note = e.what();
      ctx.record_failure(child.chain);
      all_ok = false;
      node.children.push_back(std::move(child));
    }
  }

  node.verdict = all_ok;
  return node;
}

}  // namespace

SignCertificate check_pd(const BlockMatrix& b, const Tolerances& tol, PdMode mode) {
  tol.validate();
  if (!b.self_adjoint()) {
    throw NotSelfAdjoint("check_pd: block matrix is not self-adjoint within sym_tol");
  }
  PdContext ctx{tol, mode, 0, false, false, std::nullopt};
  SignCertificate cert;
  cert.root = eval_pd_node(b, SchurChain{}, ctx);
  cert.leaf_count = ctx.leaf_count;
  cert.failure = ctx.first_failure;
  if (ctx.any_false) {
    cert.verdict = PdVerdict::NotPositiveDefinite;
  } else if (ctx.any_error) {
    cert.verdict = PdVerdict::Indeterminate;
  } else {
    cert.verdict = PdVerdict::PositiveDefinite;
  }
  return cert;
}

int recursion_depth(std::int64_t n) {
  if (n < 1) throw Error("recursion_depth: n must be >= 1");
  int k = 0;
  while ((std::int64_t{1} << (k + 1)) <= n) ++k;
  return ((std::int64_t{1} << k) == n) ? k : k + 1;
}

namespace {

std::int64_t count_by_recursion(std::int64_t n, std::unordered_map<std::int64_t, std::int64_t>& memo) {
  if (n == 1) return 1;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  std::int64_t v;
  if (n % 2 == 0) {
    v = 4 * count_by_recursion(n / 2, memo);
  } else {
    v = 2 * (count_by_recursion(n / 2, memo) + count_by_recursion(n / 2 + 1, memo));
  }
  memo.emplace(n, v);
  return v;
}

}  // namespace

std::int64_t count_inequalities(std::int64_t n) {
  if (n < 1) throw Error("count_inequalities: n must be >= 1");
  int k = 0;
  while ((std::int64_t{1} << (k + 1)) <= n) ++k;
  const std::int64_t closed = (std::int64_t{1} << k) * (3 * n - (std::int64_t{1} << (k + 1)));
  std::unordered_map<std::int64_t, std::int64_t> memo;
  const std::int64_t recursive = count_by_recursion(n, memo);
  if (closed != recursive) {
    throw Error("count_inequalities: closed form and recursion disagree at n = " +
                std::to_string(n));
  }
  return closed;
}

namespace {

void enum_rec(int order, const SchurChain& chain, std::vector<SchurChain>& out) {
  if (order == 1) {
    out.push_back(chain);
    return;
  }
  const int lo = order / 2;
  const int hi = order - lo;
  enum_rec(lo, chain.extended(1, 1), out);
  enum_rec(hi, chain.extended(2, 2), out);
  enum_rec(hi, chain.extended(2, 1), out);
  enum_rec(lo, chain.extended(1, 2), out);
}

}  // namespace

std::vector<SchurChain> enumerate_chains(int n) {
  if (n < 1) throw Error("enumerate_chains: n must be >= 1");
  std::vector<SchurChain> out;
  enum_rec(n, SchurChain{}, out);
  return out;
}

}  // namespace schurcert
