#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "graysynth/angle.hpp"
#include "graysynth/circuit.hpp"
#include "graysynth/errors.hpp"
#include "graysynth/parity_net.hpp"
#include "graysynth/phase_poly.hpp"

namespace graysynth {

/// A circuit plus its wire names; names map 1:1 onto wire indices.
struct CircuitFile {
  std::vector<std::string> names;
  std::vector<char> primary;  // wires listed under .i (all, when .i is absent)
  Circuit circ;
};

namespace detail {

struct Lines {
  std::vector<std::pair<int, std::vector<std::string>>> rows;  // (line no, tokens)

  explicit Lines(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
      ++no;
      if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
        line.pop_back();
      std::istringstream ls(line);
      std::vector<std::string> tokens;
      std::string tok;
      while (ls >> tok) tokens.push_back(tok);
      if (!tokens.empty()) rows.emplace_back(no, std::move(tokens));
    }
  }
};

inline std::int64_t parse_int(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    std::int64_t v = std::stoll(tok, &used);
    if (used != tok.size()) throw ParseError(line, "bad integer \"" + tok + "\"");
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (...) {
    throw ParseError(line, "bad integer \"" + tok + "\"");
  }
}

inline Angle parse_angle(const std::string& tok, int line) {
  auto slash = tok.find('/');
  if (slash == std::string::npos) return Angle(parse_int(tok, line), 1);
  std::int64_t num = parse_int(tok.substr(0, slash), line);
  std::int64_t den = parse_int(tok.substr(slash + 1), line);
  if (den <= 0) throw ParseError(line, "denominator must be positive");
  return Angle(num, den);
}

inline BitVec parse_bits(const std::string& tok, int n, int line) {
  if (static_cast<int>(tok.size()) != n) throw ParseError(line, "expected " + std::to_string(n) + " bits");
  for (char ch : tok)
    if (ch != '0' && ch != '1') throw ParseError(line, "bad bit string \"" + tok + "\"");
  return BitVec::from_string(tok);
}

inline int expect_arity_header(const Lines& lines, std::size_t& i) {
  if (i >= lines.rows.size()) throw ParseError(0, "missing \"n <arity>\" header");
  const auto& [no, tokens] = lines.rows[i];
  if (tokens.size() != 2 || tokens[0] != "n") throw ParseError(no, "expected \"n <arity>\"");
  std::int64_t n = parse_int(tokens[1], no);
  if (n < 1) throw ParseError(no, "arity must be positive");
  ++i;
  return static_cast<int>(n);
}

}  // namespace detail

inline CircuitFile parse_qc(const std::string& text) {
  detail::Lines lines(text);
  CircuitFile f;
  std::map<std::string, int> index;
  std::size_t i = 0;

  auto wire = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw UndeclaredWire(name);
    return it->second;
  };

  // Header: .v, then optional .i, up to BEGIN.
  bool saw_v = false;
  for (; i < lines.rows.size(); ++i) {
    const auto& [no, tokens] = lines.rows[i];
    if (tokens[0] == "BEGIN") break;
    if (tokens[0] == ".v") {
      if (saw_v) throw ParseError(no, "duplicate .v line");
      saw_v = true;
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        if (index.count(tokens[k])) throw ParseError(no, "duplicate wire \"" + tokens[k] + "\"");
        index[tokens[k]] = static_cast<int>(f.names.size()) + 1;
        f.names.push_back(tokens[k]);
      }
    } else if (tokens[0] == ".i") {
      if (!saw_v) throw ParseError(no, ".i before .v");
      f.primary.assign(f.names.size(), 0);
      for (std::size_t k = 1; k < tokens.size(); ++k) f.primary[wire(tokens[k]) - 1] = 1;
    } else {
      throw ParseError(no, "unexpected \"" + tokens[0] + "\" before BEGIN");
    }
  }
  if (!saw_v) throw ParseError(0, "missing .v line");
  if (f.names.empty()) throw ParseError(0, ".v declares no wires");
  if (i >= lines.rows.size()) throw ParseError(0, "missing BEGIN");
  ++i;  // skip BEGIN
  if (f.primary.empty()) f.primary.assign(f.names.size(), 1);
  f.circ = Circuit(static_cast<int>(f.names.size()));

  bool ended = false;
  for (; i < lines.rows.size(); ++i) {
    const auto& [no, tokens] = lines.rows[i];
    if (tokens[0] == "END") {
      ended = true;
      ++i;
      break;
    }
    const std::string& op = tokens[0];
    const std::size_t args = tokens.size() - 1;
    auto arg = [&](std::size_t k) { return wire(tokens[k + 1]); };
    for (std::size_t a = 1; a + 1 < tokens.size(); ++a)
      for (std::size_t b = a + 1; b < tokens.size(); ++b)
        if (tokens[a] == tokens[b] && (op == "tof" || op == "Z"))
          throw ParseError(no, "repeated wire \"" + tokens[a] + "\"");
    if (op == "tof") {
      if (args == 1)
        f.circ.append(Gate::not_gate(arg(0)));
      else if (args == 2)
        f.circ.append(Gate::cnot(arg(0), arg(1)));
      else if (args == 3)
        f.circ.append(Gate::toffoli(arg(0), arg(1), arg(2)));
      else if (args >= 4) {
        std::vector<int> controls;
        for (std::size_t k = 0; k + 1 < args; ++k) controls.push_back(arg(k));
        f.circ.append(Gate::mcx(std::move(controls), arg(args - 1)));
      } else
        throw ParseError(no, "tof needs at least one wire");
    } else if (op == "H" && args == 1) {
      f.circ.append(Gate::h(arg(0)));
    } else if (op == "X" && args == 1) {
      f.circ.append(Gate::not_gate(arg(0)));
    } else if (op == "T" && args == 1) {
      f.circ.append(Gate::rz(Angle(1, 8), arg(0)));
    } else if (op == "T*" && args == 1) {
      f.circ.append(Gate::rz(Angle(7, 8), arg(0)));
    } else if (op == "S" && args == 1) {
      f.circ.append(Gate::rz(Angle(1, 4), arg(0)));
    } else if (op == "S*" && args == 1) {
      f.circ.append(Gate::rz(Angle(3, 4), arg(0)));
    } else if (op == "Z" && args == 1) {
      f.circ.append(Gate::rz(Angle(1, 2), arg(0)));
    } else if (op == "Z" && args == 3) {
      f.circ.append(Gate::ccz(arg(0), arg(1), arg(2)));
    } else if (op == "Rz" && args == 2) {
      f.circ.append(Gate::rz(detail::parse_angle(tokens[1], no), wire(tokens[2])));
    } else {
      throw ParseError(no, "unknown gate \"" + op + "\"");
    }
  }
  if (!ended) throw ParseError(0, "missing END");
  for (; i < lines.rows.size(); ++i)
    throw ParseError(lines.rows[i].first, "content after END");
  return f;
}

inline std::string write_qc(const CircuitFile& f) {
  std::ostringstream out;
  out << ".v";
  for (const auto& name : f.names) out << ' ' << name;
  out << "\n.i";
  for (std::size_t k = 0; k < f.names.size(); ++k)
    if (f.primary.empty() || f.primary[k]) out << ' ' << f.names[k];
  out << "\n\nBEGIN\n";
  auto name = [&](int w) -> const std::string& { return f.names[w - 1]; };
  for (const Gate& g : f.circ.gates) {
    switch (g.kind) {
      case GateKind::Cnot:
        out << "tof " << name(g.control()) << ' ' << name(g.target());
        break;
      case GateKind::Not:
        out << "X " << name(g.target());
        break;
      case GateKind::H:
        out << "H " << name(g.target());
        break;
      case GateKind::Toffoli:
        out << "tof " << name(g.wires[0]) << ' ' << name(g.wires[1]) << ' ' << name(g.wires[2]);
        break;
      case GateKind::Mcx:
        out << "tof";
        for (int w : g.wires) out << ' ' << name(w);
        break;
      case GateKind::Ccz:
        out << "Z " << name(g.wires[0]) << ' ' << name(g.wires[1]) << ' ' << name(g.wires[2]);
        break;
      case GateKind::Rz:
        if (g.angle == Angle(1, 8))
          out << "T " << name(g.target());
        else if (g.angle == Angle(7, 8))
          out << "T* " << name(g.target());
        else if (g.angle == Angle(1, 4))
          out << "S " << name(g.target());
        else if (g.angle == Angle(3, 4))
          out << "S* " << name(g.target());
        else if (g.angle == Angle(1, 2))
          out << "Z " << name(g.target());
        else
          out << "Rz " << g.angle.str() << ' ' << name(g.target());
        break;
    }
    out << '\n';
  }
  out << "END\n";
  return out.str();
}

/// Writes with generated wire names q1..qn.
inline std::string write_qc(const Circuit& c) {
  CircuitFile f;
  for (int i = 1; i <= c.n; ++i) f.names.push_back("q" + std::to_string(i));
  f.primary.assign(c.n, 1);
  f.circ = c;
  return write_qc(f);
}

inline ParitySet parse_parity_set(const std::string& text) {
  detail::Lines lines(text);
  std::size_t i = 0;
  int n = detail::expect_arity_header(lines, i);
  ParitySet s(n);
  for (; i < lines.rows.size(); ++i) {
    const auto& [no, tokens] = lines.rows[i];
    if (tokens.size() != 1) throw ParseError(no, "expected one bit string per line");
    s.insert(detail::parse_bits(tokens[0], n, no));
  }
  return s;
}

inline std::string write_parity_set(const ParitySet& s) {
  std::ostringstream out;
  out << "n " << s.arity() << '\n';
  for (const BitVec& y : s.members()) out << y.str() << '\n';
  return out.str();
}

inline PhasePolynomial parse_phase_poly(const std::string& text) {
  detail::Lines lines(text);
  std::size_t i = 0;
  int n = detail::expect_arity_header(lines, i);
  PhasePolynomial f(n);
  for (; i < lines.rows.size(); ++i) {
    const auto& [no, tokens] = lines.rows[i];
    if (tokens.size() != 2) throw ParseError(no, "expected \"<num>/<den> <bits>\"");
    BitVec y = detail::parse_bits(tokens[1], n, no);
    if (y.none()) throw ZeroParity();
    f.add(y, detail::parse_angle(tokens[0], no));
  }
  return f;
}

inline std::string write_phase_poly(const PhasePolynomial& f) {
  std::ostringstream out;
  out << "n " << f.arity() << '\n';
  for (const auto& [y, a] : f.terms()) out << a.str() << ' ' << y.str() << '\n';
  return out.str();
}

/// Matrix format: header "n <cols>", one row bit string per line.
inline BitMatrix parse_bit_matrix(const std::string& text) {
  detail::Lines lines(text);
  std::size_t i = 0;
  int n = detail::expect_arity_header(lines, i);
  BitMatrix m(0, n);
  for (; i < lines.rows.size(); ++i) {
    const auto& [no, tokens] = lines.rows[i];
    if (tokens.size() != 1) throw ParseError(no, "expected one row per line");
    m.append_row(detail::parse_bits(tokens[0], n, no));
  }
  return m;
}

inline std::string write_bit_matrix(const BitMatrix& m) {
  std::ostringstream out;
  out << "n " << m.cols() << '\n';
  for (int i = 1; i <= m.rows(); ++i) out << m.row(i).str() << '\n';
  return out.str();
}

}  // namespace graysynth
