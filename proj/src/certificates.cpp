#include "schurcert/certificates.hpp"

#include <sstream>

namespace schurcert {

namespace {

const char* kSuperscript[] = {"¹", "²"};
const char* kSubscript[] = {"₁", "₂"};

}  // namespace

std::string SchurChain::str() const {
  std::string s;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (!s.empty()) s += '.';
    s += 'D';
    s += static_cast<char>('0' + it->first);
    s += static_cast<char>('0' + it->second);
  }
  return s;
}

std::string SchurChain::pretty() const {
  if (steps.empty()) return "B";
  std::string s;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    s += "Δ";
    s += kSuperscript[it->first - 1];
    s += kSubscript[it->second - 1];
  }
  s += "(B)";
  return s;
}

std::string to_string(PdVerdict v) {
  switch (v) {
    case PdVerdict::PositiveDefinite: return "PositiveDefinite";
    case PdVerdict::NotPositiveDefinite: return "NotPositiveDefinite";
    default: return "Indeterminate";
  }
}

std::string to_string(NNVerdict v) {
  switch (v) {
    case NNVerdict::Nonnegative: return "Nonnegative";
    case NNVerdict::NotNonnegative: return "NotNonnegative";
    default: return "PreconditionFailed";
  }
}

namespace {

nlohmann::ordered_json node_to_json(const CertNode& node) {
  nlohmann::ordered_json j;
  j["chain"] = node.chain;
  j["order"] = node.order;
  if (node.lambda_min) j["lambda_min"] = *node.lambda_min;
  j["verdict"] = node.verdict;
  if (node.singular) j["singular"] = true;
  if (!node.note.empty()) j["note"] = node.note;
  if (!node.children.empty()) {
    nlohmann::ordered_json kids = nlohmann::ordered_json::array();
    for (const CertNode& c : node.children) kids.push_back(node_to_json(c));
    j["children"] = std::move(kids);
  }
  return j;
}

// Machine chains like "D12.D22" display in the operator notation
// "Δ¹₂Δ²₂(B)"; labels from the explicit paths pass through unchanged.
std::string chain_display(const std::string& chain) {
  if (chain.empty()) return "B";
  std::string out;
  size_t pos = 0;
  while (pos < chain.size()) {
    if (chain.size() - pos < 3 || chain[pos] != 'D') return chain;
    const char i = chain[pos + 1];
    const char j = chain[pos + 2];
    if ((i != '1' && i != '2') || (j != '1' && j != '2')) return chain;
    out += "Δ";
    out += kSuperscript[i - '1'];
    out += kSubscript[j - '1'];
    pos += 3;
    if (pos < chain.size()) {
      if (chain[pos] != '.') return chain;
      ++pos;
    }
  }
  return out + "(B)";
}

void node_pretty(const CertNode& node, int depth, std::ostringstream& out) {
  for (int i = 0; i < depth; ++i) out << "  ";
  out << chain_display(node.chain) << "  order=" << node.order;
  if (node.lambda_min) out << "  lambda_min=" << *node.lambda_min;
  out << "  " << (node.verdict ? "ok" : "VIOLATED");
  if (!node.note.empty()) out << "  [" << node.note << "]";
  out << '\n';
  for (const CertNode& c : node.children) node_pretty(c, depth + 1, out);
}

}  // namespace

nlohmann::ordered_json SignCertificate::to_json() const {
  nlohmann::ordered_json j;
  j["verdict"] = to_string(verdict);
  j["leaf_count"] = leaf_count;
  if (failure) j["failure"] = *failure;
  j["root"] = node_to_json(root);
  return j;
}

std::string SignCertificate::pretty() const {
  std::ostringstream out;
  out << "verdict: " << to_string(verdict) << "  (leaf checks: " << leaf_count << ")\n";
  if (failure) out << "first violated chain: " << chain_display(*failure) << "\n";
  node_pretty(root, 0, out);
  return out.str();
}

nlohmann::ordered_json NNCertificate::to_json() const {
  nlohmann::ordered_json j;
  j["verdict"] = to_string(verdict);
  if (failure_stage) j["failure_stage"] = *failure_stage;
  nlohmann::ordered_json st = nlohmann::ordered_json::array();
  for (const NNStage& s : stages) {
    nlohmann::ordered_json e;
    e["stage"] = s.stage;
    e["order"] = s.order;
    if (s.gate_pass) {
      e["gate"] = {{"pass", *s.gate_pass}, {"ratio", s.gate_ratio.value_or(0.0)}};
    }
    if (s.lambda_min) e["lambda_min"] = *s.lambda_min;
    if (s.check_pass) e["check_pass"] = *s.check_pass;
    st.push_back(std::move(e));
  }
  j["stages"] = std::move(st);
  return j;
}

std::string NNCertificate::pretty() const {
  std::ostringstream out;
  out << "verdict: " << to_string(verdict) << "\n";
  if (failure_stage) out << "failure at stage: " << *failure_stage << "\n";
  for (const NNStage& s : stages) {
    out << "stage " << s.stage << "  (Δ̃¹₂)^" << s.stage << "(B) order=" << s.order;
    if (s.gate_pass) {
      out << "  gate " << (*s.gate_pass ? "pass" : "FAIL")
          << " (ratio=" << s.gate_ratio.value_or(0.0) << ")";
    }
    if (s.lambda_min) out << "  lambda_min=" << *s.lambda_min;
    if (s.check_pass) out << "  " << (*s.check_pass ? "ok" : "VIOLATED");
    out << '\n';
  }
  return out.str();
}

}  // namespace schurcert
