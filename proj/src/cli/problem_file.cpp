#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pluri/cli.hpp"
#include "pluri/error.hpp"
#include "pluri/poly_text.hpp"

namespace pluri {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

[[noreturn]] void fail(int line, std::size_t col, const std::string& msg) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

double parse_real(std::string_view s) {
  s = trim(s);
  const auto slash = s.find('/');
  if (slash != std::string_view::npos) return parse_real(s.substr(0, slash)) / parse_real(s.substr(slash + 1));
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(ErrorCode::Parse, "bad number '" + std::string(s) + "'");
  return v;
}

long parse_int(std::string_view s) {
  s = trim(s);
  long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(ErrorCode::Parse, "bad integer '" + std::string(s) + "'");
  return v;
}

std::string format_real(double x, std::chars_format fmt = std::chars_format::general) {
  char buf[512];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, fmt);
  return std::string(buf, ptr);
}

std::vector<cd> parse_complex_list(std::string_view s) {
  std::vector<cd> out;
  int depth = 0;
  std::size_t start = std::string_view::npos;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    const bool end = i == s.size();
    const char c = end ? ' ' : s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    const bool space = (c == ' ' || c == '\t') && depth == 0;
    if (start == std::string_view::npos) {
      if (!space && !end) start = i;
    } else if (space || end) {
      out.push_back(parse_complex(s.substr(start, i - start)));
      start = std::string_view::npos;
    }
  }
  return out;
}

HoloPoly poly_at(std::string_view text, int nv, int line, std::size_t col) {
  try {
    return parse_poly(text, nv);
  } catch (const Error& e) {
    std::size_t off = 1;
    const std::string what = e.what();
    const auto at = what.find("offset ");
    if (at != std::string::npos) std::sscanf(what.c_str() + at, "offset %zu", &off);
    const auto colon = what.find(": ");
    fail(line, col + off - 1, colon == std::string::npos ? what : what.substr(colon + 2));
  }
}

SampleDomain parse_domain(std::string_view v) {
  SampleDomain d;
  const auto words = split_top(v, ' ');
  std::vector<std::string_view> w;
  for (auto x : words)
    if (!x.empty()) w.push_back(x);
  if (w.empty()) throw Error(ErrorCode::Parse, "empty domain");
  if (w[0] == "bidisk" && w.size() == 1) {
    d.kind = DomainKind::ClosedBidisk;
  } else if (w[0] == "torus" && w.size() == 1) {
    d.kind = DomainKind::Torus2;
  } else if (w[0] == "disk" && w.size() == 1) {
    d.kind = DomainKind::ClosedDisk;
  } else if (w[0] == "fiber" && w.size() == 2) {
    d.kind = DomainKind::FiberDisk;
    d.a = parse_complex(w[1]);
  } else if (w[0] == "face" && w.size() == 3 && (w[1] == "z1" || w[1] == "z2")) {
    d.kind = DomainKind::Face;
    d.face_var = w[1] == "z1" ? 0 : 1;
    d.a = parse_complex(w[2]);
  } else {
    throw Error(ErrorCode::Parse, "unknown domain '" + std::string(v) + "'");
  }
  return d;
}

std::string domain_text(const SampleDomain& d) {
  switch (d.kind) {
    case DomainKind::ClosedBidisk: return "bidisk";
    case DomainKind::Torus2: return "torus";
    case DomainKind::ClosedDisk: return "disk";
    case DomainKind::FiberDisk: return "fiber " + format_complex(d.a);
    case DomainKind::Face: return std::string("face z") + (d.face_var ? "2 " : "1 ") + format_complex(d.a);
  }
  return "?";
}

struct PendingGenerator {
  std::string_view g, f;
  int line;
  std::size_t g_col, f_col;
};

}  // namespace

cd parse_complex(std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    const auto parts = split_top(text.substr(1, text.size() - 2), ',');
    if (parts.size() == 2) return {parse_real(parts[0]), parse_real(parts[1])};
  }
  if (text == "i") return {0, 1};
  if (text == "-i") return {0, -1};
  if (!text.empty() && text.back() == 'i') return {0, parse_real(text.substr(0, text.size() - 1))};
  return parse_real(text);
}

std::string format_complex(cd z) {
  return "(" + format_real(z.real(), std::chars_format::fixed) + "," + format_real(z.imag(), std::chars_format::fixed) +
         ")";
}

std::vector<int> parse_degrees(std::string_view text) {
  text = trim(text);
  std::vector<int> out;
  const auto dots = text.find("..");
  if (dots != std::string_view::npos) {
    const long a = parse_int(text.substr(0, dots));
    std::string_view rest = text.substr(dots + 2);
    long step = 1;
    const auto colon = rest.find(':');
    if (colon != std::string_view::npos) {
      step = parse_int(rest.substr(colon + 1));
      rest = rest.substr(0, colon);
    }
    const long b = parse_int(rest);
    if (step < 1 || a < 0 || b < a || b > 200) throw Error(ErrorCode::Parse, "bad degree range '" + std::string(text) + "'");
    for (long d = a; d <= b; d += step) out.push_back(static_cast<int>(d));
  } else {
    for (auto part : split_top(text, ',')) out.push_back(static_cast<int>(parse_int(part)));
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i] < 0 || (i && out[i] <= out[i - 1]))
      throw Error(ErrorCode::Parse, "degrees must be non-negative and strictly increasing");
  if (out.empty()) throw Error(ErrorCode::Parse, "no degrees");
  return out;
}

ProblemFile parse_problem(std::string_view text) {
  ProblemFile p;
  bool have_domain = false;
  std::vector<PendingGenerator> gens;
  std::vector<std::pair<std::string_view, int>> queries;
  std::optional<std::pair<std::string_view, std::pair<int, std::size_t>>> track;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (trim(raw).empty()) continue;

    const auto eq = raw.find('=');
    if (eq == std::string_view::npos) fail(line_no, raw.size() - trim(raw).size() + 1, "expected 'key = value'");
    const std::string_view key = trim(raw.substr(0, eq));
    const std::size_t key_col = raw.find(key) + 1;
    const std::string_view value = trim(raw.substr(eq + 1));
    const std::size_t value_col = value.empty() ? eq + 2 : static_cast<std::size_t>(value.data() - raw.data()) + 1;

    try {
      if (key == "g" || key == "f") {
        PendingGenerator pg{{}, {}, line_no, 0, 0};
        if (key == "f") {
          pg.f = value;
          pg.f_col = value_col;
        } else {
          const auto parts = split_top(value, ',');
          pg.g = parts[0];
          pg.g_col = value_col;
          if (parts.size() > 2) fail(line_no, value_col, "expected 'g = <poly>, f = <poly>'");
          if (parts.size() == 2) {
            const auto fe = parts[1].find('=');
            if (fe == std::string_view::npos || trim(parts[1].substr(0, fe)) != "f")
              fail(line_no, static_cast<std::size_t>(parts[1].data() - raw.data()) + 1, "expected 'f = <poly>'");
            pg.f = trim(parts[1].substr(fe + 1));
            pg.f_col = static_cast<std::size_t>(pg.f.data() - raw.data()) + 1;
          }
        }
        gens.push_back(pg);
      } else if (key == "domain") {
        const int res = p.domain.resolution;
        p.domain = parse_domain(value);
        p.domain.resolution = res;
        have_domain = true;
      } else if (key == "resolution") {
        p.domain.resolution = static_cast<int>(parse_int(value));
        if (p.domain.resolution < 8) fail(line_no, value_col, "resolution must be at least 8");
      } else if (key == "degrees") {
        p.degrees = parse_degrees(value);
      } else if (key == "tol") {
        p.tol = parse_real(value);
      } else if (key == "targets") {
        p.targets.clear();
        for (auto t : split_top(value, ',')) p.targets.emplace_back(t);
      } else if (key == "cap") {
        p.cap = static_cast<std::size_t>(parse_int(value));
      } else if (key == "stability") {
        if (value != "true" && value != "false") fail(line_no, value_col, "expected true or false");
        p.stability = value == "true";
      } else if (key == "arcs") {
        p.arcs = static_cast<int>(parse_int(value));
      } else if (key == "delta") {
        p.delta = parse_real(value);
      } else if (key == "query") {
        queries.emplace_back(value, line_no);
      } else if (key == "track_poly") {
        track = {value, {line_no, value_col}};
      } else if (key == "t_grid") {
        const auto dots = value.find("..");
        const auto colon = value.rfind(':');
        if (dots == std::string_view::npos || colon == std::string_view::npos || colon < dots)
          fail(line_no, value_col, "expected a..b:count");
        p.t_grid.a = parse_real(value.substr(0, dots));
        p.t_grid.b = parse_real(value.substr(dots + 2, colon - dots - 2));
        p.t_grid.count = static_cast<int>(parse_int(value.substr(colon + 1)));
      } else if (key == "contour") {
        const auto parts = parse_complex_list(value);
        if (parts.size() != 3) fail(line_no, value_col, "expected 'center radius nodes'");
        p.contour = {parts[0], parts[1].real(), static_cast<int>(parts[2].real())};
      } else {
        fail(line_no, key_col, "unknown key '" + std::string(key) + "'");
      }
    } catch (const Error& e) {
      if (std::string(e.what()).rfind("line ", 0) == 0) throw;
      fail(line_no, value_col, e.what());
    }
  }
  if (!have_domain) throw Error(ErrorCode::Parse, "missing domain");

  const int nv = p.num_vars();
  for (const auto& pg : gens) {
    PluriharmonicFn fn{HoloPoly(nv), HoloPoly(nv)};
    if (!pg.g.empty()) fn.g = poly_at(pg.g, nv, pg.line, pg.g_col);
    if (!pg.f.empty()) fn.f = poly_at(pg.f, nv, pg.line, pg.f_col);
    p.generators.push_back(std::move(fn));
  }
  if (p.generators.empty()) throw Error(ErrorCode::Parse, "no generators");
  for (const auto& [value, line] : queries) {
    const auto halves = split_top(value, ';');
    if (halves.size() != 2) fail(line, 1, "expected 'query = z-coordinates ; w-coordinates'");
    Query q{parse_complex_list(halves[0]), parse_complex_list(halves[1])};
    if (static_cast<int>(q.z.size()) != nv || q.w.size() != p.generators.size())
      fail(line, 1, "query needs " + std::to_string(nv) + " z and " + std::to_string(p.generators.size()) +
                        " w coordinates");
    p.queries.push_back(std::move(q));
  }
  if (track) p.track_poly = poly_at(track->first, 2, track->second.first, track->second.second);
  return p;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

std::string serialize_problem(const ProblemFile& p) {
  std::ostringstream os;
  os << "domain = " << domain_text(p.domain) << '\n';
  os << "resolution = " << p.domain.resolution << '\n';
  for (const auto& g : p.generators) os << "g = " << to_text(g.g) << ", f = " << to_text(g.f) << '\n';
  bool arithmetic = p.degrees.size() >= 2;
  for (std::size_t i = 2; i < p.degrees.size() && arithmetic; ++i)
    arithmetic = p.degrees[i] - p.degrees[i - 1] == p.degrees[1] - p.degrees[0];
  os << "degrees = ";
  if (arithmetic) {
    os << p.degrees.front() << ".." << p.degrees.back() << ':' << p.degrees[1] - p.degrees[0];
  } else {
    for (std::size_t i = 0; i < p.degrees.size(); ++i) os << (i ? ", " : "") << p.degrees[i];
  }
  os << '\n';
  os << "tol = " << format_real(p.tol) << '\n';
  if (!p.targets.empty()) {
    os << "targets = ";
    for (std::size_t i = 0; i < p.targets.size(); ++i) os << (i ? ", " : "") << p.targets[i];
    os << '\n';
  }
  os << "cap = " << p.cap << '\n';
  os << "stability = " << (p.stability ? "true" : "false") << '\n';
  os << "arcs = " << p.arcs << '\n';
  os << "delta = " << format_real(p.delta) << '\n';
  for (const auto& q : p.queries) {
    os << "query =";
    for (cd z : q.z) os << ' ' << format_complex(z);
    os << " ;";
    for (cd w : q.w) os << ' ' << format_complex(w);
    os << '\n';
  }
  if (p.track_poly) os << "track_poly = " << to_text(*p.track_poly) << '\n';
  os << "t_grid = " << format_real(p.t_grid.a) << ".." << format_real(p.t_grid.b) << ':' << p.t_grid.count << '\n';
  os << "contour = " << format_complex(p.contour.center) << ' ' << format_real(p.contour.radius) << ' '
     << p.contour.nodes << '\n';
  return os.str();
}

}  // namespace pluri
