#include <istream>
#include <locale>
#include <ostream>
#include <sstream>

#include "csrkn/construction.hpp"
#include "csrkn/format.hpp"

namespace csrkn {

std::string format_double(double x) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  os << x;
  return os.str();
}

namespace {

void write_row(std::ostream& os, const char* label, const Vector& v) {
  os << label;
  for (double x : v) os << ' ' << format_double(x);
  os << '\n';
}

[[noreturn]] void bad(const std::string& msg) {
  throw std::runtime_error("tableau parse error: " + msg);
}

Vector read_values(std::istringstream& ls, std::size_t n, const std::string& what) {
  Vector v(n);
  for (auto& x : v)
    if (!(ls >> x)) bad("expected " + std::to_string(n) + " values for " + what);
  std::string extra;
  if (ls >> extra) bad("trailing data after " + what);
  return v;
}

}  // namespace

void write_tableau(std::ostream& os, const RKNTableau& t) {
  const std::size_t s = static_cast<std::size_t>(t.stages());
  os << "# csrkn tableau\n";
  if (t.provenance) {
    os << "method " << t.provenance->method << '\n';
    os << "family " << family_name(t.provenance->family) << '\n';
    os << "gamma " << format_double(t.provenance->gamma) << '\n';
  }
  os << "s " << s << '\n';
  write_row(os, "c", t.c);
  os << "aBar\n";
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) os << (j ? " " : "") << format_double(t.a_bar(i, j));
    os << '\n';
  }
  write_row(os, "bBar", t.b_bar);
  write_row(os, "bPrime", t.b_prime);
}

RKNTableau read_tableau(std::istream& is) {
  RKNTableau t;
  TableauProvenance prov;
  bool has_prov = false;
  std::size_t s = 0;
  bool have_c = false, have_a = false, have_bbar = false, have_bprime = false;

  std::string line;
  std::size_t pending_rows = 0;
  while (std::getline(is, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    ls.imbue(std::locale::classic());
    if (pending_rows > 0) {
      const std::size_t i = s - pending_rows;
      const Vector row = read_values(ls, s, "aBar row " + std::to_string(i + 1));
      for (std::size_t j = 0; j < s; ++j) t.a_bar(i, j) = row[j];
      --pending_rows;
      continue;
    }
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "method") {
      ls >> prov.method;
      has_prov = true;
    } else if (key == "family") {
      std::string name;
      ls >> name;
      const auto kind = parse_family(name);
      if (!kind) bad("unknown family '" + name + "'");
      prov.family = *kind;
      has_prov = true;
    } else if (key == "gamma") {
      if (!(ls >> prov.gamma)) bad("gamma value");
      has_prov = true;
    } else if (key == "s") {
      long long n = 0;
      if (!(ls >> n) || n < 1) bad("stage count must be a positive integer");
      s = static_cast<std::size_t>(n);
      t.a_bar = Matrix(s, s);
    } else if (s == 0) {
      bad("'" + key + "' before stage count");
    } else if (key == "c") {
      t.c = read_values(ls, s, "c");
      have_c = true;
    } else if (key == "aBar") {
      pending_rows = s;
      have_a = true;
    } else if (key == "bBar") {
      t.b_bar = read_values(ls, s, "bBar");
      have_bbar = true;
    } else if (key == "bPrime") {
      t.b_prime = read_values(ls, s, "bPrime");
      have_bprime = true;
    } else {
      bad("unknown key '" + key + "'");
    }
  }
  if (pending_rows > 0) bad("aBar truncated");
  if (!(have_c && have_a && have_bbar && have_bprime)) bad("missing c, aBar, bBar or bPrime");
  if (has_prov) t.provenance = prov;
  return t;
}

}  // namespace csrkn
