#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "errors.hpp"

namespace multgraph {

/// A positive sequence theta_1, theta_2, ... in one of three closed forms.
class ThetaSpec {
public:
  struct Constant {
    double b;
  };
  struct Geometric {
    double c, q; ///< theta_i = c q^(i-1)
  };
  struct Explicit {
    std::vector<double> prefix;
    double tail;
  };

  static ThetaSpec constant(double b) {
    positive(b);
    return ThetaSpec(Constant{b}, "const:" + number(b));
  }
  static ThetaSpec geometric(double c, double q) {
    positive(c);
    positive(q);
    return ThetaSpec(Geometric{c, q}, "geom:" + number(c) + "," + number(q));
  }
  static ThetaSpec explicit_list(std::vector<double> prefix, double tail) {
    std::string text = "list:";
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      positive(prefix[i]);
      text += (i ? "," : "") + number(prefix[i]);
    }
    positive(tail);
    text += ";tail=" + number(tail);
    return ThetaSpec(Explicit{std::move(prefix), tail}, std::move(text));
  }

  /// "const:0.5", "geom:0.5,0.8" or "list:0.5,0.4;tail=0.3".
  static ThetaSpec parse(const std::string &text) {
    const auto colon = text.find(':');
    detail::require(colon != std::string::npos,
                    "theta spec '" + text + "' lacks a 'kind:' prefix");
    const std::string kind = text.substr(0, colon);
    const std::string body = text.substr(colon + 1);
    ThetaSpec spec = [&] {
      if (kind == "const") {
        const auto v = numbers(body);
        detail::require(v.size() == 1, "const: expects one value");
        return constant(v[0]);
      }
      if (kind == "geom") {
        const auto v = numbers(body);
        detail::require(v.size() == 2, "geom: expects c,q");
        return geometric(v[0], v[1]);
      }
      if (kind == "list") {
        const auto semi = body.find(";tail=");
        detail::require(semi != std::string::npos, "list: needs ';tail=<value>'");
        const auto tail = numbers(body.substr(semi + 6));
        detail::require(tail.size() == 1, "list: tail must be one value");
        const std::string head = body.substr(0, semi);
        return explicit_list(head.empty() ? std::vector<double>{} : numbers(head),
                             tail[0]);
      }
      throw DomainError("unknown theta kind '" + kind + "'");
    }();
    spec.text_ = text;
    return spec;
  }

  /// theta_i, 1-based.
  double operator()(int i) const {
    detail::require(i >= 1, "theta is indexed from 1");
    return std::visit(
        [i](const auto &f) -> double {
          using T = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<T, Constant>)
            return f.b;
          else if constexpr (std::is_same_v<T, Geometric>)
            return f.c * std::pow(f.q, i - 1);
          else
            return static_cast<std::size_t>(i) <= f.prefix.size()
                       ? f.prefix[static_cast<std::size_t>(i) - 1]
                       : f.tail;
        },
        form_);
  }

  /// (theta_1, ..., theta_n)
  std::vector<double> first(int n) const {
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 1; i <= n; ++i)
      v.push_back((*this)(i));
    return v;
  }

  /// sup_i theta_i; infinite for an increasing geometric sequence.
  double sup() const {
    return std::visit(
        [](const auto &f) -> double {
          using T = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<T, Constant>)
            return f.b;
          else if constexpr (std::is_same_v<T, Geometric>)
            return f.q <= 1 ? f.c : std::numeric_limits<double>::infinity();
          else {
            double s = f.tail;
            for (double x : f.prefix)
              s = std::max(s, x);
            return s;
          }
        },
        form_);
  }

  const std::string &to_string() const { return text_; }

private:
  using Form = std::variant<Constant, Geometric, Explicit>;
  ThetaSpec(Form form, std::string text)
      : form_(std::move(form)), text_(std::move(text)) {}

  static void positive(double x) {
    detail::require(std::isfinite(x) && x > 0, "theta values must be positive");
  }
  static std::string number(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
  }
  static std::vector<double> numbers(const std::string &csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::size_t used = 0;
      double v = 0;
      try {
        v = std::stod(tok, &used);
      } catch (const std::exception &) {
        throw DomainError("cannot parse theta value '" + tok + "'");
      }
      detail::require(used == tok.size(),
                      "trailing characters in theta value '" + tok + "'");
      out.push_back(v);
    }
    return out;
  }

  Form form_;
  std::string text_;
};

} // namespace multgraph
