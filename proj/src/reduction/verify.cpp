#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "vcalc/errors.hpp"
#include "vcalc/reduction/reduction.hpp"

namespace vcalc {

namespace {

unsigned worker_count(unsigned threads, std::size_t jobs) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs, 1)));
}

// Runs job(i) for i < n on a pool; each worker owns its Calculus.
template <typename Job>
void run_parallel(std::size_t n, unsigned threads, const AlgebraPtr& alg, Job job) {
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  auto worker = [&] {
    Calculus calc(alg);
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        job(i, calc);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned w = worker_count(threads, n);
  for (unsigned t = 1; t < w; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// Minimal numeric evaluator for the scalar text used in targets.
class NumericParser {
 public:
  NumericParser(std::string_view text, double c) : text_(text), c_(c) {}

  std::complex<double> parse() {
    auto v = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError("unexpected text in '" + std::string(text_) + "'");
    return v;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char ch) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::complex<double> expr() {
    std::complex<double> v = accept('-') ? -term() : term();
    for (;;) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }
  std::complex<double> term() {
    std::complex<double> v = power();
    for (;;) {
      if (accept('*'))
        v *= power();
      else if (accept('/'))
        v /= power();
      else
        return v;
    }
  }
  std::complex<double> power() {
    std::complex<double> v = atom();
    if (accept('^')) v = std::pow(v, atom());
    return v;
  }
  std::complex<double> atom() {
    skip();
    if (accept('(')) {
      auto v = expr();
      if (!accept(')')) throw ParseError("missing ')'");
      return v;
    }
    if (accept('-')) return -atom();
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      if (!accept('(')) throw ParseError("sqrt needs '('");
      auto v = expr();
      if (!accept(')')) throw ParseError("missing ')'");
      return std::sqrt(v);
    }
    if (pos_ < text_.size() && text_[pos_] == 'c') {
      ++pos_;
      return c_;
    }
    if (pos_ < text_.size() && text_[pos_] == 'i') {
      ++pos_;
      return {0, 1};
    }
    std::size_t end = pos_;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    if (end == pos_) throw ParseError("unexpected character in '" + std::string(text_) + "'");
    const double v = std::stod(std::string(text_.substr(pos_, end - pos_)));
    pos_ = end;
    return v;
  }

  std::string_view text_;
  double c_;
  std::size_t pos_ = 0;
};

std::string format_complex(std::complex<double> z) {
  char buf[96];
  if (std::abs(z.imag()) < 1e-15 * std::max(1.0, std::abs(z.real())))
    std::snprintf(buf, sizeof buf, "%.15g", z.real());
  else
    std::snprintf(buf, sizeof buf, "%.15g%+.15gi", z.real(), z.imag());
  return buf;
}

ReportEntry check_nth_product_zero(Calculus& calc, const GeneratorQuadruple& q, int n) {
  const State r = calc.nth_product(q.G, n, q.W);
  ReportEntry e;
  e.identity = "G_(" + std::to_string(n) + ")W";
  e.expected = "0";
  e.computed = format_state(*q.algebra, r);
  e.difference = e.computed;
  e.pass = r.is_zero();
  return e;
}

}  // namespace

std::complex<double> eval_text_numeric(const std::string& text, double c) { return NumericParser(text, c).parse(); }

VerificationReport verify_brackets(const GeneratorQuadruple& quad, const TargetBracketTable& targets,
                                   unsigned threads) {
  std::vector<std::vector<ReportEntry>> results(targets.size());
  run_parallel(targets.size(), threads, quad.algebra, [&](std::size_t i, Calculus& calc) {
    const auto start = std::chrono::steady_clock::now();
    const TargetBracket& t = targets[i];
    const LambdaPolynomial computed = calc.bracket(quad_field(quad, t.left), quad_field(quad, t.right));
    const LambdaPolynomial expected = expand_target(t, quad, calc);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const int top = std::max(computed.degree(), expected.degree());
    for (int j = top; j >= 0; --j) {
      ReportEntry e;
      e.identity = t.name();
      e.lambda_power = j;
      e.expected = format_target_power(t, static_cast<unsigned>(j));
      const State diff = computed.coeff(j) - expected.coeff(j);
      e.computed = format_state(*quad.algebra, computed.coeff(j));
      e.difference = format_state(*quad.algebra, diff);
      e.pass = diff.is_zero();
      e.seconds = secs;
      results[i].push_back(std::move(e));
    }
  });
  VerificationReport report;
  report.mode = to_string(quad.mode);
  for (auto& r : results) report.entries.insert(report.entries.end(), r.begin(), r.end());
  return report;
}

VerificationReport verify_primary(const GeneratorQuadruple& quad, unsigned threads) {
  VerificationReport report = verify_brackets(quad, primary_targets(), threads);
  report.suite = "primary";
  Calculus calc(quad.algebra);
  for (int n = 1; n <= 3; ++n) report.entries.push_back(check_nth_product_zero(calc, quad, n));
  report.notes = quad.notes;
  return report;
}

VerificationReport verify_sw32(const GeneratorQuadruple& quad, const TargetBracketTable& targets, unsigned threads) {
  VerificationReport report = verify_brackets(quad, targets, threads);
  report.suite = "sw32";
  report.header.push_back("c = 6+18k");
  report.header.push_back("κ = (6+5c)/(√(15-c)√(21+4c))");
  // Primary conditions not already covered by the bracket table.
  TargetBracketTable extra;
  for (const auto& p : primary_targets()) {
    bool covered = false;
    for (const auto& t : targets) covered = covered || (t.left == p.left && t.right == p.right);
    if (!covered) extra.push_back(p);
  }
  report.append(verify_brackets(quad, extra, threads));
  Calculus calc(quad.algebra);
  for (int n = 1; n <= 3; ++n) report.entries.push_back(check_nth_product_zero(calc, quad, n));
  report.notes = quad.notes;
  return report;
}

const std::vector<std::string>& degenerate_expressions() {
  static const std::vector<std::string> exprs = {"1-2*k", "1+2*k", "1+3*k", "5+8*k"};
  return exprs;
}

std::vector<std::string> specialization_header(const GaussRational& k0) {
  for (const auto& e : degenerate_expressions())
    if (parse_scalar(e).as_rational().eval(k0).is_zero())
      throw EvaluationPole(e + " vanishes at k = " + k0.to_string());
  return {"k = " + k0.to_string(), "c = " + central_charge().as_rational().eval(k0).to_string()};
}

VerificationReport evaluate_targets_at(const TargetBracketTable& targets, const GaussRational& k0, double tolerance) {
  VerificationReport report;
  report.suite = "evaluation";
  const GaussRational c0 = central_charge().as_rational().eval(k0);
  const double c = c0.to_complex().real();
  for (const auto& t : targets) {
    for (const auto& term : t.terms) {
      ReportEntry e;
      e.identity = t.name();
      e.lambda_power = static_cast<int>(term.lambda_power);
      e.expected = term.coeff_text + " at c = " + c0.to_string();
      try {
        const std::complex<double> exact = term.coeff.eval(k0);
        const std::complex<double> direct = eval_text_numeric(term.coeff_text, c);
        const double scale = std::max(1.0, std::abs(direct));
        e.computed = format_complex(exact);
        e.difference = format_complex(exact - direct);
        e.pass = std::isfinite(exact.real()) && std::isfinite(exact.imag()) &&
                 std::abs(exact - direct) <= tolerance * scale;
      } catch (const Error& err) {
        e.computed = err.what();
        e.difference = "singular";
        e.pass = false;
      }
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

VerificationReport spin7_instance(double tolerance) {
  const GaussRational k0(mpq_class(1, 3));
  VerificationReport report = evaluate_targets_at(sw32_targets(), k0, tolerance);
  report.suite = "spin7";
  report.header = specialization_header(k0);

  auto exact_entry = [&](const std::string& name, const std::string& text, const GaussRational& expected) {
    ReportEntry e;
    e.identity = name;
    e.expected = expected.to_string();
    const GaussRational v = parse_scalar(text).as_rational().eval(k0);
    e.computed = v.to_string();
    e.difference = (v - expected).to_string();
    e.pass = v == expected;
    report.entries.push_back(std::move(e));
  };
  exact_entry("c(1/3)", "6+18*k", GaussRational(12));
  exact_entry("1-2k at k=1/3", "1-2*k", GaussRational(mpq_class(1, 3)));
  exact_entry("5+8k at k=1/3", "5+8*k", GaussRational(mpq_class(23, 3)));
  exact_entry("1+2k at k=1/3", "1+2*k", GaussRational(mpq_class(5, 3)));
  exact_entry("1+3k at k=1/3", "1+3*k", GaussRational(2));

  // 2(6+5c)/(√(15-c)√(21+4c)) at c = 12 equals 132/(√3·√69).
  ReportEntry e;
  e.identity = "2κ at c=12";
  e.expected = "132/(√3·√69)";
  const Scalar kappa2 = parse_scalar("2*(6+5*c)/(sqrt(15-c)*sqrt(21+4*c))", target_symbols());
  const std::complex<double> v = kappa2.eval(k0);
  const double direct = 132.0 / (std::sqrt(3.0) * std::sqrt(69.0));
  e.computed = format_complex(v);
  e.difference = format_complex(v - direct);
  e.pass = std::abs(v - direct) <= tolerance * direct;
  report.entries.push_back(std::move(e));
  return report;
}

}  // namespace vcalc
