#include "pfaff/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "pfaff/errors.hpp"

namespace pfaff::io {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> words;
  std::string rest_after(std::size_t k) const;  // words k.. joined by spaces
};

std::string Line::rest_after(std::size_t k) const {
  std::string out;
  for (std::size_t i = k; i < words.size(); ++i) {
    if (!out.empty()) out += ' ';
    out += words[i];
  }
  return out;
}

std::vector<Line> lines_of(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ws(raw);
    Line l{number, {}};
    for (std::string w; ws >> w;) l.words.push_back(w);
    if (!l.words.empty()) out.push_back(std::move(l));
  }
  if (out.empty()) throw Error(ErrorCode::Parse, "empty input");
  return out;
}

[[noreturn]] void fail(const Line& l, const std::string& what) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(l.number) + ": " + what);
}

std::size_t to_size(const Line& l, const std::string& w) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(w, &pos);
  } catch (const std::exception&) {
    fail(l, "expected a non-negative integer, got '" + w + "'");
  }
  if (pos != w.size() || w[0] == '-') fail(l, "expected a non-negative integer, got '" + w + "'");
  return v;
}

std::pair<std::size_t, std::size_t> entry_index(const Line& l, std::size_t n) {
  if (l.words.size() < 3) fail(l, "expected '<i> <j> <value>'");
  const std::size_t i = to_size(l, l.words[0]);
  const std::size_t j = to_size(l, l.words[1]);
  if (i < 1 || j < 1 || i > n || j > n)
    throw Error(ErrorCode::IndexOutOfRange, "line " + std::to_string(l.number) + ": index out of range 1.." +
                                                std::to_string(n));
  return {i - 1, j - 1};
}

Field header_field(const Line& l, std::size_t k) {
  if (l.words.size() <= k) fail(l, "missing field descriptor");
  return Field::parse(l.words[k]);
}

Poly curve_line(const Line& l, const Field& f) {
  if (l.words.size() < 2) fail(l, "missing curve polynomial");
  return Poly::parse(l.rest_after(1), f);
}

RepFile parse_blocks(std::string_view text, const char* keyword, char block_letter, bool skew) {
  const auto lines = lines_of(text);
  const Line& h = lines.front();
  if (h.words[0] != keyword) fail(h, std::string("expected header '") + keyword + "'");
  if (h.words.size() != 3) fail(h, std::string("header is '") + keyword + " <size> <field>'");
  const std::size_t n = to_size(h, h.words[1]);
  const Field f = header_field(h, 2);
  RepFile r{{ConstMatrix(f, n, n), ConstMatrix(f, n, n), ConstMatrix(f, n, n)}, Poly(f, 0)};
  bool have_curve = false;
  int block = -1;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    const std::string& w = l.words[0];
    if (w == "curve") {
      r.curve = curve_line(l, f);
      have_curve = true;
    } else if (w.size() == 2 && w[0] == block_letter && w[1] >= '0' && w[1] <= '2') {
      if (l.words.size() != 1) fail(l, "block header takes no arguments");
      block = w[1] - '0';
    } else {
      if (block < 0) fail(l, "entry before any block header");
      const auto [i, j] = entry_index(l, n);
      if (l.words.size() != 3) fail(l, "expected '<i> <j> <scalar>'");
      const Scalar v = f.parse_scalar(l.words[2]);
      auto& m = r.blocks[static_cast<std::size_t>(block)];
      if (skew) {
        if (i >= j) fail(l, "skew entries need i < j");
        m(i, j) = v;
        m(j, i) = -v;
      } else {
        m(i, j) = v;
      }
    }
  }
  if (!have_curve) throw Error(ErrorCode::Parse, "missing 'curve' line");
  return r;
}

std::string format_blocks(const char* keyword, char block_letter, bool skew, const std::array<ConstMatrix, 3>& blocks,
                          const Poly& curve) {
  std::ostringstream os;
  const std::size_t n = blocks[0].rows();
  os << keyword << ' ' << n << ' ' << curve.field().to_string() << '\n';
  os << "curve " << curve.to_string() << '\n';
  for (std::size_t b = 0; b < 3; ++b) {
    os << block_letter << b << '\n';
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = skew ? i + 1 : 0; j < n; ++j)
        if (!blocks[b](i, j).is_zero()) os << i + 1 << ' ' << j + 1 << ' ' << blocks[b](i, j) << '\n';
  }
  return os.str();
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write '" + path + "'");
  out << text;
}

std::string file_kind(std::string_view text) { return lines_of(text).front().words[0]; }

SkewPolyMatrix parse_skew(std::string_view text) {
  const auto lines = lines_of(text);
  const Line& h = lines.front();
  if (h.words[0] != "skew" || h.words.size() != 4) fail(h, "header is 'skew <n> <degree> <field>'");
  const std::size_t n = to_size(h, h.words[1]);
  const auto degree = static_cast<std::uint32_t>(to_size(h, h.words[2]));
  const Field f = header_field(h, 3);
  if (n % 2 != 0) throw Error(ErrorCode::InvalidInput, "skew matrix size must be even");
  SkewPolyMatrix s(f, n, degree);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    const auto [i, j] = entry_index(l, n);
    if (i >= j) fail(l, "skew entries need i < j");
    Poly p = Poly::parse(l.rest_after(2), f);
    if (!p.is_zero() && p.degree() != degree)
      throw Error(ErrorCode::DegreeMismatch, "line " + std::to_string(l.number) + ": entry of degree " +
                                                 std::to_string(p.degree()) + ", expected " + std::to_string(degree));
    s.set(i, j, std::move(p));
  }
  return s;
}

std::string format_skew(const SkewPolyMatrix& s) {
  std::ostringstream os;
  os << "skew " << s.size() << ' ' << s.degree() << ' ' << s.field().to_string() << '\n';
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!s.upper(i, j).is_zero()) os << i + 1 << ' ' << j + 1 << ' ' << s.upper(i, j).to_string() << '\n';
  return os.str();
}

RepFile parse_pfaffrep(std::string_view text) { return parse_blocks(text, "pfaffrep", 'A', true); }

std::string format_pfaffrep(const std::array<ConstMatrix, 3>& blocks, const Poly& curve) {
  return format_blocks("pfaffrep", 'A', true, blocks, curve);
}

RepFile parse_detrep(std::string_view text) { return parse_blocks(text, "detrep", 'M', false); }

std::string format_detrep(const std::array<ConstMatrix, 3>& blocks, const Poly& curve) {
  return format_blocks("detrep", 'M', false, blocks, curve);
}

ParamFile parse_params(std::string_view text) {
  const auto lines = lines_of(text);
  const Line& h = lines.front();
  if (h.words[0] != "params" || h.words.size() != 3) fail(h, "header is 'params <reduced|full> <field>'");
  quartic::ParamMode mode;
  if (h.words[1] == "reduced") {
    mode = quartic::ParamMode::Reduced;
  } else if (h.words[1] == "full") {
    mode = quartic::ParamMode::Full;
  } else {
    fail(h, "mode must be 'reduced' or 'full'");
  }
  const Field f = header_field(h, 2);
  ParamFile out{quartic::QuarticParams(mode, f), std::nullopt};
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    if (l.words[0] == "cij") {
      if (l.words.size() != 4) fail(l, "expected 'cij <i> <j> <scalar>'");
      const quartic::Index ij{static_cast<int>(to_size(l, l.words[1])), static_cast<int>(to_size(l, l.words[2]))};
      if (out.params.has(ij)) fail(l, "duplicate parameter " + quartic::param_name(ij));
      out.params.set(ij, f.parse_scalar(l.words[3]));
    } else if (l.words[0] == "action") {
      if (l.words.size() != 4) fail(l, "expected 'action <a> <e> <p>'");
      out.action = quartic::GroupElement{f.parse_scalar(l.words[1]), f.parse_scalar(l.words[2]),
                                         f.parse_scalar(l.words[3])};
    } else {
      fail(l, "unknown directive '" + l.words[0] + "'");
    }
  }
  return out;
}

std::string format_params(const quartic::QuarticParams& params) {
  std::ostringstream os;
  os << "params " << (params.mode() == quartic::ParamMode::Reduced ? "reduced" : "full") << ' '
     << params.field().to_string() << '\n';
  for (const auto& [ij, v] : params.values()) os << "cij " << ij.first << ' ' << ij.second << ' ' << v << '\n';
  return os.str();
}

}  // namespace pfaff::io
