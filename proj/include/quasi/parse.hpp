#pragma once

// Text syntax:
//   ring element  "4+5t", "-t", "1", "-1+1t"   (t stands for alpha)
//   window        "(0,1]", "[-1,1]", "(-1+t,1]"
//   generator     "J[a=2,m=1+1t]"

#include "quasi/liealg.hpp"
#include "quasi/qring.hpp"
#include "quasi/window.hpp"

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quasi {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

class Scanner {
 public:
  Scanner(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  bool done() const { return pos_ == text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t where() const { return offset_ + pos_; }
  void advance() { ++pos_; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string digits() {
    std::string out;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) out += text_[pos_++];
    return out;
  }
  [[noreturn]] void fail(const std::string& what) const {
    if (done()) throw ParseError(what + ", found end of input", where());
    throw ParseError(what + ", found '" + std::string(1, peek()) + "'", where());
  }

 private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

inline RingElement parse_ring_element(const RingSpec& r, std::string_view text,
                                      std::size_t offset) {
  Scanner in(text, offset);
  bool have_const = false, have_alpha = false;
  Integer c0 = 0, c1 = 0;
  bool first = true;
  while (!in.done()) {
    bool negative = false;
    if (in.accept('-'))
      negative = true;
    else if (!in.accept('+') && !first)
      in.fail("expected '+' or '-'");
    first = false;
    const std::size_t term_start = in.where();
    const std::string num = in.digits();
    const bool is_alpha = in.accept('t');
    if (num.empty() && !is_alpha) in.fail("expected a number or 't'");
    Integer value = num.empty() ? Integer(1) : Integer(num);
    if (negative) value = -value;
    bool& seen = is_alpha ? have_alpha : have_const;
    if (seen) throw ParseError("repeated term", term_start);
    seen = true;
    (is_alpha ? c1 : c0) = std::move(value);
  }
  if (first) in.fail("expected a ring element");
  return RingElement(r, std::move(c0), std::move(c1));
}

}  // namespace detail

inline RingElement parse_ring_element(std::string_view text, const RingSpec& r = {}) {
  return detail::parse_ring_element(r, text, 0);
}

inline Window parse_window(std::string_view text, const RingSpec& r = {}) {
  if (text.empty()) throw ParseError("expected '[' or '('", 0);
  const char open = text.front();
  if (open != '[' && open != '(') throw ParseError("expected '[' or '('", 0);
  const char close = text.back();
  if (text.size() < 2 || (close != ']' && close != ')'))
    throw ParseError("expected ']' or ')'", text.size());
  const std::string_view body = text.substr(1, text.size() - 2);
  const std::size_t comma = body.find(',');
  if (comma == std::string_view::npos) throw ParseError("expected ','", text.size() - 1);
  RingElement lo = detail::parse_ring_element(r, body.substr(0, comma), 1);
  RingElement hi = detail::parse_ring_element(r, body.substr(comma + 1), comma + 2);
  try {
    return Window({std::move(lo), open == '['}, {std::move(hi), close == ']'});
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

/// "J[a=<nat>,m=<element>]"; validity is checked separately.
inline Generator parse_generator(std::string_view text, const RingSpec& r = {}) {
  constexpr std::string_view head = "J[a=";
  if (text.substr(0, head.size()) != head) throw ParseError("expected 'J[a='", 0);
  detail::Scanner in(text.substr(head.size()), head.size());
  const std::string a = in.digits();
  if (a.empty()) in.fail("expected a grading");
  in.expect(',');
  in.expect('m');
  in.expect('=');
  if (text.back() != ']') throw ParseError("expected ']'", text.size());
  const std::size_t m_start = in.where();
  const std::string_view m_text = text.substr(m_start, text.size() - 1 - m_start);
  unsigned long grading = 0;
  try {
    grading = std::stoul(a);
  } catch (const std::exception&) {
    throw ParseError("grading out of range", head.size());
  }
  return {static_cast<unsigned>(grading), detail::parse_ring_element(r, m_text, m_start)};
}

inline Mode parse_mode(std::string_view text) {
  if (text == "strict-paper") return Mode::StrictPaper;
  if (text == "symmetric-closed") return Mode::SymmetricClosed;
  throw ParseError("expected 'strict-paper' or 'symmetric-closed'", 0);
}

/// "m,eps", e.g. "1,1" for the golden ring.
inline RingSpec parse_ring_spec(std::string_view text) {
  const std::size_t comma = text.find(',');
  if (comma == std::string_view::npos) throw ParseError("expected 'm,eps'", text.size());
  const auto number = [](std::string_view part, std::size_t offset) {
    detail::Scanner in(part, offset);
    const bool negative = in.accept('-');
    if (!negative) in.accept('+');
    const std::string digits = in.digits();
    if (digits.empty() || digits.size() > 6) in.fail("expected a small integer");
    if (!in.done()) in.fail("unexpected character");
    const int v = std::stoi(digits);
    return negative ? -v : v;
  };
  const int m = number(text.substr(0, comma), 0);
  const int eps = number(text.substr(comma + 1), comma + 1);
  try {
    return RingSpec(m, eps);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace quasi
