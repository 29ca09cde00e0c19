#include <algorithm>
#include <cctype>
#include <map>

#include "fratio/affine_family.hpp"

namespace fratio {

namespace {

struct Form {
  std::map<char, std::int64_t> coeff;
  std::int64_t constant = 0;

  Form &add(const Form &o, std::int64_t k) {
    for (const auto &[v, c] : o.coeff) {
      coeff[v] += k * c;
    }
    constant += k * o.constant;
    return *this;
  }
};

class Parser {
public:
  explicit Parser(std::string_view text) : s_(text) {}

  std::vector<Form> list() {
    skip();
    const bool bracket = peek() == '[';
    if (bracket) {
      ++pos_;
    }
    std::vector<Form> out;
    out.push_back(expr());
    while (eat(',')) {
      out.push_back(expr());
    }
    if (bracket && !eat(']')) {
      fail("expected ']'");
    }
    skip();
    if (pos_ != s_.size()) {
      fail("unexpected character");
    }
    return out;
  }

private:
  Form expr() {
    Form f;
    std::int64_t sign = 1;
    if (eat('-')) {
      sign = -1;
    } else {
      eat('+');
    }
    f.add(term(), sign);
    for (;;) {
      if (eat('+')) {
        f.add(term(), 1);
      } else if (eat('-')) {
        f.add(term(), -1);
      } else {
        return f;
      }
    }
  }

  Form term() {
    skip();
    std::int64_t k = 1;
    bool have_number = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      k = number();
      have_number = true;
      eat('*');
    }
    skip();
    Form f;
    if (eat('(')) {
      f = expr();
      if (!eat(')')) {
        fail("expected ')'");
      }
    } else if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      const char v = static_cast<char>(std::tolower(static_cast<unsigned char>(s_[pos_++])));
      f.coeff[v] = 1;
    } else if (have_number) {
      f.constant = 1;
    } else {
      fail("expected a term");
    }
    Form out;
    return out.add(f, k);
  }

  std::int64_t number() {
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > 100000000000LL) {
        fail("coefficient too large");
      }
      v = v * 10 + (s_[pos_++] - '0');
    }
    return v;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string &why) const {
    throw FamilyError(FamilyErrorKind::Parse, "family text: " + why + " at offset " + std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void append_term(std::string &out, std::int64_t c, char name) {
  if (c == 0) {
    return;
  }
  if (c < 0) {
    out += '-';
  } else if (!out.empty() && out.back() != ',') {
    out += '+';
  }
  const std::int64_t m = c < 0 ? -c : c;
  if (m != 1) {
    out += std::to_string(m);
  }
  out += name;
}

} // namespace

AffineList parse_family(std::string_view text, int min_params) {
  const auto forms = Parser(text).list();
  std::string names;
  for (const auto &f : forms) {
    if (f.constant != 0) {
      throw FamilyError(FamilyErrorKind::Parse, "family text: entries must be homogeneous, found a constant term");
    }
    for (const auto &[v, c] : f.coeff) {
      if (c != 0 && names.find(v) == std::string::npos) {
        names += v;
      }
    }
  }
  std::sort(names.begin(), names.end());
  // Letters name consecutive parameters, so "a,c" means d = 3 with b unused.
  int d = std::max(min_params, 1);
  for (char v : names) {
    if (v < 'a' || v >= 'a' + AffineList::kMaxParams) {
      throw FamilyError(FamilyErrorKind::Parse, std::string("family text: unknown parameter '") + v + "'");
    }
    d = std::max(d, v - 'a' + 1);
  }
  std::vector<Coeffs> entries;
  for (const auto &f : forms) {
    Coeffs c(static_cast<std::size_t>(d), 0);
    for (const auto &[v, k] : f.coeff) {
      c[static_cast<std::size_t>(v - 'a')] = k;
    }
    entries.push_back(std::move(c));
  }
  return AffineList::make(d, std::move(entries));
}

std::string AffineList::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    for (int p = 0; p < d; ++p) {
      append_term(out, entries[i][static_cast<std::size_t>(p)], static_cast<char>('a' + p));
    }
  }
  return out;
}

} // namespace fratio
