// SPDX-License-Identifier: Apache-2.0
#include "codebounds/sdpa_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace codebounds {

namespace {

std::string shortest_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& tok) {
  double v = 0.0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
    throw std::invalid_argument("sdpa: bad numeric token '" + tok + "'");
  return v;
}

}  // namespace

SdpProblem normalized_min_form(const SdpProblem& p) {
  SdpProblem q = p;
  if (q.maximize) {
    for (auto& x : q.c) x = -x;
    q.maximize = false;
  }
  return q;
}

void export_sdpa(const SdpProblem& p, std::ostream& out) {
  p.validate();
  SdpProblem q = normalized_min_form(p);
  out << q.num_constraints << "\n";
  out << q.blocks.size() << "\n";
  for (size_t b = 0; b < q.blocks.size(); ++b) {
    if (b) out << " ";
    out << (q.blocks[b].diagonal ? -q.blocks[b].size : q.blocks[b].size);
  }
  out << "\n";
  for (int l = 0; l < q.num_constraints; ++l) {
    if (l) out << " ";
    out << shortest_double(q.c[l]);
  }
  out << "\n";
  for (const auto& e : q.entries)
    out << e.constraint << " " << e.block + 1 << " " << e.i + 1 << " " << e.j + 1 << " "
        << shortest_double(e.value) << "\n";
}

void export_sdpa_file(const SdpProblem& p, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  export_sdpa(p, f);
  if (!f) throw std::runtime_error("write failed: " + path);
}

std::string export_sdpa_string(const SdpProblem& p) {
  std::ostringstream os;
  export_sdpa(p, os);
  return os.str();
}

SdpProblem parse_sdpa(std::istream& in) {
  SdpProblem p;
  p.maximize = false;
  size_t nblocks = 0;
  if (!(in >> p.num_constraints)) throw std::invalid_argument("sdpa: missing constraint count");
  if (!(in >> nblocks)) throw std::invalid_argument("sdpa: missing block count");
  for (size_t b = 0; b < nblocks; ++b) {
    long s;
    if (!(in >> s)) throw std::invalid_argument("sdpa: missing block size");
    if (s == 0) throw std::invalid_argument("sdpa: zero block size");
    p.blocks.push_back({static_cast<int>(s < 0 ? -s : s), s < 0});
  }
  p.c.resize(p.num_constraints);
  for (int l = 0; l < p.num_constraints; ++l) {
    std::string tok;
    if (!(in >> tok)) throw std::invalid_argument("sdpa: missing objective value");
    p.c[l] = parse_double(tok);
  }
  while (true) {
    int matno, blkno, i, j;
    std::string tok;
    if (!(in >> matno)) break;
    if (!(in >> blkno >> i >> j >> tok)) throw std::invalid_argument("sdpa: truncated entry line");
    p.entries.push_back({matno, blkno - 1, i - 1, j - 1, parse_double(tok)});
  }
  p.validate();
  return p;
}

namespace {

// Pulls every numeric token out of a brace-delimited section beginning after
// `key`; tolerant about separators since solver outputs vary slightly.
std::vector<double> numbers_after(const std::string& text, const std::string& key,
                                  size_t expect) {
  size_t pos = text.find(key);
  if (pos == std::string::npos)
    throw std::invalid_argument("sdpa solution: missing section '" + key + "'");
  pos = text.find('{', pos);
  if (pos == std::string::npos)
    throw std::invalid_argument("sdpa solution: no brace after '" + key + "'");
  int depth = 0;
  size_t end = pos;
  for (; end < text.size(); ++end) {
    if (text[end] == '{') ++depth;
    if (text[end] == '}') {
      --depth;
      if (depth == 0) break;
    }
  }
  if (depth != 0) throw std::invalid_argument("sdpa solution: unbalanced braces in " + key);
  std::vector<double> out;
  size_t i = pos;
  while (i <= end) {
    char ch = text[i];
    if ((ch >= '0' && ch <= '9') || ch == '+' || ch == '-' || ch == '.') {
      double v = 0.0;
      auto res = std::from_chars(text.data() + i, text.data() + end, v);
      if (res.ec == std::errc()) {
        out.push_back(v);
        i = static_cast<size_t>(res.ptr - text.data());
        continue;
      }
    }
    ++i;
  }
  if (expect != 0 && out.size() != expect)
    throw std::invalid_argument("sdpa solution: section '" + key + "' has " +
                                std::to_string(out.size()) + " numbers, expected " +
                                std::to_string(expect));
  return out;
}

double scalar_after(const std::string& text, const std::string& key, double fallback) {
  size_t pos = text.find(key);
  if (pos == std::string::npos) return fallback;
  pos = text.find('=', pos);
  if (pos == std::string::npos) return fallback;
  ++pos;
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  double v = fallback;
  std::from_chars(text.data() + pos, text.data() + text.size(), v);
  return v;
}

}  // namespace

SdpSolution parse_sdpa_solution(std::istream& in, const SdpProblem& problem) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  SdpSolution sol;
  sol.x = numbers_after(text, "xVec", static_cast<size_t>(problem.num_constraints));
  size_t total = 0;
  for (const auto& b : problem.blocks)
    total += b.diagonal ? static_cast<size_t>(b.size)
                        : static_cast<size_t>(b.size) * static_cast<size_t>(b.size);
  auto nums = numbers_after(text, "yMat", total);
  size_t at = 0;
  for (const auto& b : problem.blocks) {
    Matrix m(b.size, b.size);
    if (b.diagonal) {
      for (int i = 0; i < b.size; ++i) m(i, i) = nums[at++];
    } else {
      for (int i = 0; i < b.size; ++i)
        for (int j = 0; j < b.size; ++j) m(i, j) = nums[at++];
    }
    sol.Y.push_back(std::move(m));
  }
  sol.primal_obj = scalar_after(text, "objValPrimal", 0.0);
  sol.dual_obj = scalar_after(text, "objValDual", 0.0);
  sol.status = SdpStatus::Optimal;
  return sol;
}

SdpSolution parse_sdpa_solution_file(const std::string& path, const SdpProblem& problem) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open: " + path);
  return parse_sdpa_solution(f, problem);
}

SdpProblem parse_sdpa_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open: " + path);
  return parse_sdpa(f);
}

}  // namespace codebounds
