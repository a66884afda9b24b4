#include "fishburn/paired_diagram.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "text_util.hpp"

namespace fishburn {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("composition: needs at least one part");
  if (parts_.front() < 1) throw std::invalid_argument("composition: first part must be >= 1");
  for (int part : parts_)
    if (part < 0) throw std::invalid_argument("composition: negative part");
}

int Composition::sum() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Composition::to_string() const {
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Composition Composition::parse(std::string_view text) {
  std::vector<int> parts;
  for (std::string_view field : detail::split(detail::trim(text), ','))
    parts.push_back(detail::parse_int(field, "composition"));
  return Composition(std::move(parts));
}

PairedDiagram::PairedDiagram(Composition lambda, FishburnDiagram diagram)
    : lambda_(std::move(lambda)), diagram_(std::move(diagram)) {
  if (lambda_.size() != diagram_.length() + 1)
    throw std::invalid_argument("paired diagram: composition needs " +
                                std::to_string(diagram_.length() + 1) + " parts, got " +
                                std::to_string(lambda_.size()));
}

int PairedDiagram::dots() const { return lambda_.sum() + diagram_.dots(); }

int PairedDiagram::d_statistic() const { return lambda_.sum(); }

std::string PairedDiagram::to_string() const {
  return lambda_.to_string() + "|" + diagram_.to_string();
}

PairedDiagram PairedDiagram::parse(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos)
    throw std::invalid_argument("paired diagram: expected \"composition|diagram\"");
  if (text.find('|', bar + 1) != std::string_view::npos)
    throw std::invalid_argument("paired diagram: more than one '|'");
  return {Composition::parse(text.substr(0, bar)),
          FishburnDiagram::parse(text.substr(bar + 1))};
}

namespace {

// Compositions of `total` into `parts` parts, first part >= 1, rest >= 0,
// in lexicographic order.
void compositions_rec(int total, int parts, std::vector<int>& prefix,
                      const std::function<void(const std::vector<int>&)>& visit) {
  if (parts == 1) {
    prefix.push_back(total);
    if (prefix.front() >= 1) visit(prefix);
    prefix.pop_back();
    return;
  }
  const int low = prefix.empty() ? 1 : 0;
  for (int part = low; part <= total; ++part) {
    prefix.push_back(part);
    compositions_rec(total - part, parts - 1, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<PairedDiagram> all_paired_diagrams(int n, int d, Cap cap) {
  if (n < 1) throw std::invalid_argument("all_paired_diagrams: n must be >= 1");
  if (d < 1 || d > n)
    throw std::invalid_argument("all_paired_diagrams: d outside 1.." + std::to_string(n));
  CapGuard guard(cap, "paired diagrams with n=" + std::to_string(n) +
                          ", d=" + std::to_string(d));
  std::vector<PairedDiagram> out;
  auto attach_compositions = [&](const FishburnDiagram& diagram) {
    std::vector<int> prefix;
    compositions_rec(d, diagram.length() + 1, prefix, [&](const std::vector<int>& parts) {
      guard.count();
      out.emplace_back(Composition(parts), diagram);
    });
  };
  if (n == d) {
    attach_compositions(FishburnDiagram());
  } else {
    for_each_diagram(n - d, attach_compositions, std::nullopt, cap);
  }
  return out;
}

PairedDiagram psi_tilde(const PairedDiagram& pair) {
  const auto& parts = pair.composition().parts();
  // A descent at `level` only counts when the composition has nothing left
  // in the slot above it; otherwise that slot separates the two columns in
  // the diagram the pair stands for.
  const auto violation = minimal_violation(
      pair.diagram(),
      [&](int level) { return parts[static_cast<size_t>(level) + 1] == 0; });
  if (!violation) return pair;
  FishburnDiagram image = apply_surgery(pair.diagram(), *violation);
  std::vector<int> new_parts = parts;
  const auto slot = new_parts.begin() + violation->level + 1;
  if (violation->kind == Violation::Kind::ExtraDot) {
    new_parts.insert(slot, 0);  // the split column opens an empty slot
  } else {
    if (*slot != 0)
      throw std::logic_error("psi_tilde: merged a descent with a nonzero slot");
    new_parts.erase(slot);
  }
  return {Composition(std::move(new_parts)), std::move(image)};
}

SignedWeight signed_weight(const PairedDiagram& pair) {
  const int dots_in_diagram = pair.dots() - pair.d_statistic();
  const int k = pair.diagram().length();
  return {(dots_in_diagram - k) % 2 == 0 ? 1 : -1, pair.dots()};
}

FishburnDiagram embed_paired(const PairedDiagram& pair) {
  const auto& parts = pair.composition().parts();
  const auto& columns = pair.diagram().columns();
  const int k = static_cast<int>(columns.size());
  const int total_columns = pair.d_statistic() + k;

  // Host column for each original column: original column i lands at
  // lambda_1 + ... + lambda_i + i; every other column becomes a singleton at
  // its own maximal level.
  std::vector<int> host(static_cast<size_t>(k) + 1, 0);
  for (int i = 1; i <= k; ++i)
    host[static_cast<size_t>(i)] =
        host[static_cast<size_t>(i - 1)] + parts[static_cast<size_t>(i - 1)] + 1;

  std::vector<std::vector<int>> out(static_cast<size_t>(total_columns));
  std::vector<char> is_host(static_cast<size_t>(total_columns) + 1, 0);
  for (int i = 1; i <= k; ++i) is_host[static_cast<size_t>(host[static_cast<size_t>(i)])] = 1;
  for (int c = 1; c <= total_columns; ++c)
    if (!is_host[static_cast<size_t>(c)]) out[static_cast<size_t>(c - 1)] = {c - 1};

  // A maximal-level column at c blocks level c-2 in every later host column;
  // the original members index into the squares that stay free.
  for (int i = 1; i <= k; ++i) {
    const int c = host[static_cast<size_t>(i)];
    std::vector<char> blocked(static_cast<size_t>(c), 0);  // levels 0..c-2 usable
    for (int t = 2; t < c; ++t)
      if (!is_host[static_cast<size_t>(t)]) blocked[static_cast<size_t>(t - 2)] = 1;
    std::vector<int> free_levels;
    for (int level = 0; level <= c - 2; ++level)
      if (!blocked[static_cast<size_t>(level)]) free_levels.push_back(level);
    std::vector<int>& target = out[static_cast<size_t>(c - 1)];
    for (int member : columns[static_cast<size_t>(i - 1)])
      target.push_back(free_levels[static_cast<size_t>(member)]);
  }
  return FishburnDiagram(std::move(out));
}

bool in_embedded_image(const FishburnDiagram& diagram) {
  const auto& columns = diagram.columns();
  for (size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].back() != static_cast<int>(i)) continue;
    // a maximal-level column must be a pure singleton ...
    if (columns[i].size() != 1) return false;
    // ... and the level just below it may never come back later
    for (size_t later = i + 1; later < columns.size(); ++later)
      if (std::binary_search(columns[later].begin(), columns[later].end(),
                             static_cast<int>(i) - 1))
        return false;
  }
  return true;
}

PairedDiagram extract_paired(const FishburnDiagram& diagram) {
  if (!in_embedded_image(diagram))
    throw std::invalid_argument("extract_paired: diagram is not an embedded pair");
  const auto& columns = diagram.columns();
  const int total_columns = static_cast<int>(columns.size());

  std::vector<int> hosts;  // 1-based indices of the non-maximal columns
  for (int c = 1; c <= total_columns; ++c)
    if (columns[static_cast<size_t>(c - 1)].back() != c - 1) hosts.push_back(c);

  std::vector<int> parts;  // gaps between hosts are the composition parts
  int previous = 0;
  for (int c : hosts) {
    parts.push_back(c - previous - 1);
    previous = c;
  }
  parts.push_back(total_columns - previous);

  std::vector<std::vector<int>> original;
  original.reserve(hosts.size());
  for (int c : hosts) {
    std::vector<int> free_levels;
    std::vector<char> blocked(static_cast<size_t>(std::max(c - 1, 0)), 0);
    for (int t = 2; t < c; ++t)
      if (columns[static_cast<size_t>(t - 1)].back() == t - 1)
        blocked[static_cast<size_t>(t - 2)] = 1;
    for (int level = 0; level <= c - 2; ++level)
      if (!blocked[static_cast<size_t>(level)]) free_levels.push_back(level);
    std::vector<int> members;
    for (int level : columns[static_cast<size_t>(c - 1)]) {
      auto at = std::lower_bound(free_levels.begin(), free_levels.end(), level);
      if (at == free_levels.end() || *at != level)
        throw std::logic_error("extract_paired: member sits on a blocked square");
      members.push_back(static_cast<int>(at - free_levels.begin()));
    }
    original.push_back(std::move(members));
  }
  return {Composition(std::move(parts)), FishburnDiagram(std::move(original))};
}

}  // namespace fishburn
