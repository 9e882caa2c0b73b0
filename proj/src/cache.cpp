#include "oddres/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace oddres {

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {

constexpr const char* kHeader = "# oddres coefficient cache v1";

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

std::string serialize_expansion(const RSExpansion& e) {
  std::ostringstream body;
  body << kHeader << '\n';
  body << "k " << e.spec.k << '\n';
  body << "j " << e.spec.j << '\n';
  body << "S " << e.order << '\n';
  for (int s = 0; s <= e.order; ++s) {
    body << s << ' ' << numerator(e.a[static_cast<std::size_t>(s)]) << '/'
         << denominator(e.a[static_cast<std::size_t>(s)]) << '\n';
  }
  std::string text = body.str();
  text += "checksum fnv1a64 " + hex64(fnv1a64(text)) + '\n';
  return text;
}

RSExpansion deserialize_expansion(const std::string& text) {
  std::size_t chk = text.rfind("checksum fnv1a64 ");
  if (chk == std::string::npos || (chk != 0 && text[chk - 1] != '\n'))
    throw std::runtime_error("coefficient cache: missing checksum line");
  std::string body = text.substr(0, chk);
  std::istringstream tail(text.substr(chk));
  std::string word1, word2, hex;
  tail >> word1 >> word2 >> hex;
  if (hex.size() != 16 || hex64(fnv1a64(body)) != hex)
    throw std::runtime_error("coefficient cache: checksum mismatch");

  std::istringstream in(body);
  std::string line;
  if (!std::getline(in, line) || line != kHeader)
    throw std::runtime_error("coefficient cache: unrecognized header");

  auto read_field = [&](const char* key) -> long {
    if (!std::getline(in, line)) throw std::runtime_error("coefficient cache: truncated header");
    std::istringstream ls(line);
    std::string k;
    long v;
    if (!(ls >> k >> v) || k != key)
      throw std::runtime_error(std::string("coefficient cache: expected '") + key + "' line");
    return v;
  };
  long k = read_field("k");
  long j = read_field("j");
  long order = read_field("S");
  if (k < 1 || j < 0 || order < 0) throw std::runtime_error("coefficient cache: bad parameters");

  RSExpansion e;
  e.spec = OscillatorSpec(static_cast<int>(k), static_cast<int>(j));
  e.order = static_cast<int>(order);
  e.a.resize(static_cast<std::size_t>(order) + 1);
  for (long s = 0; s <= order; ++s) {
    if (!std::getline(in, line))
      throw std::runtime_error("coefficient cache: missing coefficient line");
    std::istringstream ls(line);
    long idx;
    std::string frac;
    if (!(ls >> idx >> frac) || idx != s)
      throw std::runtime_error("coefficient cache: coefficient lines out of order");
    std::size_t slash = frac.find('/');
    if (slash == std::string::npos)
      throw std::runtime_error("coefficient cache: malformed rational");
    BigInt num(frac.substr(0, slash));
    BigInt den(frac.substr(slash + 1));
    if (den <= 0) throw std::runtime_error("coefficient cache: nonpositive denominator");
    e.a[static_cast<std::size_t>(s)] = Rational(num) / Rational(den);
  }
  return e;
}

void save_expansion(const RSExpansion& e, const std::string& path) {
  std::string text = serialize_expansion(e);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("coefficient cache: cannot open for writing: " + path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("coefficient cache: write failed: " + path);
}

std::optional<RSExpansion> load_expansion(const std::string& path, const OscillatorSpec& spec,
                                          int order) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  RSExpansion e = deserialize_expansion(buf.str());
  if (e.spec.k != spec.k || e.spec.j != spec.j)
    throw std::runtime_error("coefficient cache: oscillator mismatch in " + path);
  if (e.order < order) return std::nullopt;  // present but too short: recompute
  e.order = order;
  e.a.resize(static_cast<std::size_t>(order) + 1);
  return e;
}

}  // namespace oddres
