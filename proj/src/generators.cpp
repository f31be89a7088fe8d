#include "revadd/generators.hpp"

#include <stdexcept>

namespace revadd {

namespace {

std::string idx(const std::string& base, std::size_t i) { return base + std::to_string(i); }

void close_stage(Circuit& c, const std::string& label, std::size_t first, int depth) {
  c.add_stage(label, first, c.gates().size(), depth);
}

void require_positive(std::size_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + " needs n >= 1");
}

void require_variant(int v, const char* what) {
  if (v < 1 || v > 4) throw std::invalid_argument(std::string(what) + " must be 1..4, got " + std::to_string(v));
}

// Adds the adder's lines with the roles of a stand-alone adder.
Circuit adder_shell(std::size_t n, bool carry, const std::string& name) {
  const AdderLayout l = adder_layout(n, carry);
  Circuit c(name);
  std::vector<LineInfo> lines(l.width());
  for (std::size_t i = 0; i < n; ++i) {
    lines[l.a[i]] = {idx("a", i), PrimaryInput{idx("a", i)}, RegeneratedInput{idx("a", i)}};
    lines[l.b[i]] = {idx("b", i), PrimaryInput{idx("b", i)}, Useful{idx("s", i)}};
  }
  lines[l.z] = {"z", PrimaryInput{"z"}, Useful{idx("s", n)}};
  if (l.c0) lines[*l.c0] = {"c0", PrimaryInput{"c0"}, RegeneratedInput{"c0"}};
  for (auto& info : lines) c.add_line(info.variable, info.input, info.output);
  return c;
}

}  // namespace

AdderLayout adder_layout(std::size_t n, bool with_input_carry) {
  require_positive(n, "adder");
  AdderLayout l;
  l.n = n;
  l.with_input_carry = with_input_carry;
  const Line base = with_input_carry ? 1 : 0;
  for (std::size_t i = 0; i < n; ++i) {
    l.b.push_back(static_cast<Line>(base + 2 * i));
    l.a.push_back(static_cast<Line>(base + 2 * i + 1));
  }
  l.z = static_cast<Line>(base + 2 * n);
  if (with_input_carry) l.c0 = 0;
  return l;
}

Circuit gen_rca_no_carry(std::size_t n) {
  require_positive(n, "rca-nocarry");
  const AdderLayout l = adder_layout(n, false);
  Circuit c = adder_shell(n, false, "rca-nocarry-" + std::to_string(n));
  const auto A = [&](std::size_t i) { return i == n ? l.z : l.a[i]; };
  const int ni = static_cast<int>(n);

  std::size_t first = 0;
  for (std::size_t i = 1; i < n; ++i) c.add_gate(Gate::cnot(l.a[i], l.b[i]));
  close_stage(c, "step1", first, n > 1 ? 1 : 0);

  first = c.gates().size();
  for (std::size_t i = n - 1; i >= 1; --i) c.add_gate(Gate::cnot(A(i), A(i + 1)));
  close_stage(c, "step2", first, ni - 1);

  first = c.gates().size();
  for (std::size_t i = 0; i + 1 < n; ++i) c.add_gate(Gate::toffoli(l.b[i], l.a[i], A(i + 1)));
  close_stage(c, "step3", first, 5 * (ni - 1));

  first = c.gates().size();
  for (std::size_t i = n; i-- > 0;) c.add_gate(Gate::peres(l.a[i], l.b[i], A(i + 1)));
  close_stage(c, "step4", first, 4 * ni);

  first = c.gates().size();
  for (std::size_t i = 1; i + 2 <= n; ++i) c.add_gate(Gate::cnot(l.a[i], A(i + 1)));
  close_stage(c, "step5", first, n > 2 ? ni - 2 : 0);

  first = c.gates().size();
  for (std::size_t i = 1; i < n; ++i) c.add_gate(Gate::cnot(l.a[i], l.b[i]));
  close_stage(c, "step6", first, n > 1 ? 1 : 0);
  return c;
}

Circuit gen_rca_with_carry(std::size_t n) {
  require_positive(n, "rca-carry");
  const AdderLayout l = adder_layout(n, true);
  Circuit c = adder_shell(n, true, "rca-carry-" + std::to_string(n));
  // A(i) for i in -1..n, shifted by one: A(0) is c0, A(n + 1) is z.
  const auto A = [&](std::size_t shifted) {
    if (shifted == 0) return *l.c0;
    if (shifted == n + 1) return l.z;
    return l.a[shifted - 1];
  };
  const int ni = static_cast<int>(n);

  std::size_t first = 0;
  for (std::size_t i = 0; i < n; ++i) c.add_gate(Gate::cnot(l.a[i], l.b[i]));
  close_stage(c, "step1", first, 1);

  first = c.gates().size();
  for (std::size_t s = 0; s < n; ++s) c.add_gate(Gate::cnot(A(s + 1), A(s)));
  c.add_gate(Gate::cnot(A(n), A(n + 1)));
  close_stage(c, "step2", first, 2);

  first = c.gates().size();
  for (std::size_t i = 0; i + 1 < n; ++i) c.add_gate(Gate::toffoli(A(i), l.b[i], l.a[i]));
  c.add_gate(Gate::peres(A(n - 1), l.b[n - 1], l.z));
  close_stage(c, "step3a", first, 5 * (ni - 1) + 4);

  first = c.gates().size();
  for (std::size_t i = 0; i + 1 < n; ++i) c.add_gate(Gate::not_gate(l.b[i]));
  close_stage(c, "step3b", first, 0);

  first = c.gates().size();
  for (std::size_t i = n - 1; i-- > 0;) c.add_gate(Gate::tr(A(i), l.b[i], l.a[i]));
  close_stage(c, "step4a", first, 4 * (ni - 1));

  first = c.gates().size();
  for (std::size_t i = 0; i + 1 < n; ++i) c.add_gate(Gate::not_gate(l.b[i]));
  close_stage(c, "step4b", first, n > 1 ? 1 : 0);

  first = c.gates().size();
  for (std::size_t i = n; i-- > 0;) c.add_gate(Gate::cnot(l.a[i], A(i)));
  close_stage(c, "step5", first, 1);

  first = c.gates().size();
  for (std::size_t i = 0; i < n; ++i) c.add_gate(Gate::cnot(l.a[i], l.b[i]));
  close_stage(c, "step6", first, 1);
  return c;
}

Circuit gen_detection() {
  Circuit c("detection");
  const Line k1 = c.add_line("K1", PrimaryInput{"K1"}, RegeneratedInput{"K1"});
  const Line k2 = c.add_line("K2", PrimaryInput{"K2"}, RegeneratedInput{"K2"});
  const Line k3 = c.add_line("K3", PrimaryInput{"K3"}, RegeneratedInput{"K3"});
  const Line co = c.add_line("Cout", PrimaryInput{"Cout"}, Useful{"OC"});
  const Line t = c.add_line("t", Ancilla{false}, Useful{"zero"});

  std::size_t first = 0;
  c.add_gate(Gate::not_gate(k1));
  c.add_gate(Gate::not_gate(k2));
  close_stage(c, "invert", first, 1);
  // t = !K1 & !K2, K2 line = K1 ^ K2
  first = c.gates().size();
  c.add_gate(Gate::peres(k1, k2, t));
  close_stage(c, "nor", first, 4);
  // Cout ^= K3 & (K1 | K2)
  first = c.gates().size();
  c.add_gate(Gate::tr(k3, t, co));
  close_stage(c, "carry", first, 4);
  first = c.gates().size();
  c.add_gate(Gate::cnot(k3, t));
  close_stage(c, "restore", first, 1);
  first = c.gates().size();
  c.add_gate(Gate::tr(k1, k2, t));
  close_stage(c, "uncompute", first, 4);
  first = c.gates().size();
  c.add_gate(Gate::not_gate(k1));
  c.add_gate(Gate::not_gate(k2));
  close_stage(c, "revert", first, 1);
  return c;
}

Circuit gen_correction() {
  Circuit c("correction");
  c.add_line("K0", PrimaryInput{"K0"}, Useful{"S0"});
  const Line k1 = c.add_line("K1", PrimaryInput{"K1"}, Useful{"S1"});
  const Line k2 = c.add_line("K2", PrimaryInput{"K2"}, Useful{"S2"});
  const Line k3 = c.add_line("K3", PrimaryInput{"K3"}, Useful{"S3"});
  const Line oc = c.add_line("OC", PrimaryInput{"OC"}, RegeneratedInput{"OC"});
  const Line oc2 = c.add_line("OC2", PrimaryInput{"OC2"}, RegeneratedInput{"OC2"});
  // 2-bit adder (b0, a0, b1, a1, z) = (K1, OC, K2, OC2, K3): K3..K1 += 011 * OC.
  const Circuit adder = gen_rca_no_carry(2);
  const std::vector<Line> map{k1, oc, k2, oc2, k3};
  c.append(adder, map);
  return c;
}

Circuit gen_bin2bcd() {
  Circuit c("bin2bcd");
  c.add_line("K0", PrimaryInput{"K0"}, Useful{"D0"});
  const Line k1 = c.add_line("K1", PrimaryInput{"K1"}, Useful{"D1"});
  const Line k2 = c.add_line("K2", PrimaryInput{"K2"}, Useful{"D2"});
  const Line k3 = c.add_line("K3", PrimaryInput{"K3"}, Useful{"D3"});
  const Line co = c.add_line("Cout", PrimaryInput{"Cout"}, Useful{"C"});
  // (K1, K2, K3, Cout) holds w = v >> 1 in 0..9 and becomes w + 3 when w >= 5.
  c.add_gate(Gate::peres(k1, k3, co));
  c.add_gate(Gate::cnot(co, k3));
  c.add_gate(Gate::cnot(k2, co));
  c.add_gate(Gate::cnot(k1, k3));
  c.add_gate(Gate::tr(k2, k3, co));
  c.add_gate(Gate::tr(co, k1, k2));
  c.add_gate(Gate::cnot(k2, k3));
  close_stage(c, "convert", 0, 16);
  return c;
}

std::string bcd_signal(const std::string& base, std::size_t digit, std::size_t digits) {
  if (digits == 1) return base;
  return "d" + std::to_string(digit) + "_" + base;
}

bool bcd_has_carry_in(int design) {
  require_variant(design, "BCD design");
  return design == 1 || design == 3;
}

namespace {

// Appends one BCD digit. `carry_in` is the line holding the incoming decimal carry
// (absent for a no-carry first digit). Returns the line carrying the digit's carry out.
Line append_digit(Circuit& c, int variant, std::optional<Line> carry_in, std::size_t d, std::size_t digits) {
  const bool carry = variant == 1 || variant == 3;
  const bool detect = variant == 1 || variant == 2;
  const auto name = [&](const std::string& base) { return bcd_signal(base, d, digits); };
  const std::string pre = digits == 1 ? std::string() : "d" + std::to_string(d) + ".";

  std::vector<Line> b(4), a(4);
  for (std::size_t i = 0; i < 4; ++i) {
    b[i] = c.add_line(name(idx("b", i)), PrimaryInput{name(idx("b", i))}, Useful{name(idx("s", i))});
    a[i] = c.add_line(name(idx("a", i)), PrimaryInput{name(idx("a", i))}, RegeneratedInput{name(idx("a", i))});
  }
  const Line z = c.add_line(name("z"), Ancilla{false}, Useful{name("k4")});

  std::vector<Line> map;
  if (carry) {
    map.push_back(*carry_in);
    for (std::size_t i = 0; i < 4; ++i) {
      map.push_back(b[i]);
      map.push_back(a[i]);
    }
    map.push_back(z);
    c.append(gen_rca_with_carry(4), map, pre + "adder");
  } else {
    for (std::size_t i = 0; i < 4; ++i) {
      map.push_back(b[i]);
      map.push_back(a[i]);
    }
    map.push_back(z);
    c.append(gen_rca_no_carry(4), map, pre + "adder");
  }

  if (detect) {
    const Line t = c.add_line(name("t"), Ancilla{false}, Garbage{name("g1")});
    const std::vector<Line> det{b[1], b[2], b[3], z, t};
    c.append(gen_detection(), det, pre + "detect");
    const std::size_t first = c.gates().size();
    c.add_gate(Gate::cnot(z, t));
    c.add_stage(pre + "fanout", first, c.gates().size(), 1);
    const std::vector<Line> cor{b[0], b[1], b[2], b[3], z, t};
    c.append(gen_correction(), cor, pre + "correct");
  } else {
    const std::vector<Line> conv{b[0], b[1], b[2], b[3], z};
    c.append(gen_bin2bcd(), conv, pre + "convert");
  }
  return z;
}

std::string bcd_name(int design, std::size_t n) {
  return "bcd-ndigit-d" + std::to_string(design) + "-n" + std::to_string(n);
}

}  // namespace

Circuit gen_ndigit_bcd(int design, std::size_t n) {
  require_variant(design, "BCD design");
  require_positive(n, "bcd-ndigit");
  Circuit c(bcd_name(design, n));
  std::optional<Line> carry;
  if (bcd_has_carry_in(design)) carry = c.add_line("c0", PrimaryInput{"c0"}, RegeneratedInput{"c0"});
  const int later = design <= 2 ? 1 : 3;
  for (std::size_t d = 0; d < n; ++d) {
    const int variant = d == 0 ? design : later;
    const Line out = append_digit(c, variant, carry, d, n);
    // The previous carry line is restored by this digit's adder and leaves as garbage.
    if (d > 0) c.set_output(*carry, Garbage{"c" + std::to_string(d)});
    carry = out;
  }
  c.set_output(*carry, Useful{"cout"});
  return c;
}

Circuit gen_rbcd(int variant) {
  require_variant(variant, "RBCD variant");
  Circuit c = gen_ndigit_bcd(variant, 1);
  c.set_name("rbcd-" + std::to_string(variant));
  return c;
}

FunctionalSpec adder_spec(std::size_t n, bool with_input_carry) {
  require_positive(n, "adder");
  if (n > 62) throw std::invalid_argument("adder oracle supports n <= 62");
  FunctionalSpec s;
  s.name = with_input_carry ? "a + b + c0" : "a + b";
  Field a{"a", {}, 0}, b{"b", {}, 0}, sum{"s", {}, 0};
  for (std::size_t i = 0; i < n; ++i) {
    a.bits.push_back(idx("a", i));
    b.bits.push_back(idx("b", i));
    sum.bits.push_back(idx("s", i));
  }
  sum.bits.push_back(idx("s", n));
  s.inputs = {a, b, Field{"z", {"z"}, 0}};
  if (with_input_carry) s.inputs.push_back(Field{"c0", {"c0"}, 0});
  s.outputs = {sum};
  s.eval = [n, with_input_carry](std::span<const std::uint64_t> v) -> std::optional<std::vector<std::uint64_t>> {
    const std::uint64_t total = v[0] + v[1] + (with_input_carry ? v[3] : 0);
    return std::vector<std::uint64_t>{total ^ (v[2] << n)};
  };
  return s;
}

FunctionalSpec detection_spec() {
  FunctionalSpec s;
  s.name = "OC = Cout ^ K3(K2 + K1)";
  s.inputs = {{"K1", {"K1"}, 0}, {"K2", {"K2"}, 0}, {"K3", {"K3"}, 0}, {"Cout", {"Cout"}, 0}};
  s.outputs = {{"OC", {"OC"}, 0}, {"zero", {"zero"}, 0}};
  s.eval = [](std::span<const std::uint64_t> v) -> std::optional<std::vector<std::uint64_t>> {
    return std::vector<std::uint64_t>{v[3] ^ (v[2] & (v[1] | v[0])), 0};
  };
  return s;
}

FunctionalSpec correction_spec() {
  FunctionalSpec s;
  s.name = "S = K + 6 OC (mod 16)";
  s.inputs = {{"K", {"K0", "K1", "K2", "K3"}, 0}, {"OC", {"OC"}, 0}, {"OC2", {"OC2"}, 0}};
  s.outputs = {{"S", {"S0", "S1", "S2", "S3"}, 0}};
  s.eval = [](std::span<const std::uint64_t> v) -> std::optional<std::vector<std::uint64_t>> {
    if (v[1] != v[2]) return std::nullopt;
    return std::vector<std::uint64_t>{(v[0] + 6 * v[1]) & 15U};
  };
  return s;
}

FunctionalSpec bin2bcd_spec() {
  FunctionalSpec s;
  s.name = "v -> (v >= 10, v mod 10)";
  s.inputs = {{"v", {"K0", "K1", "K2", "K3", "Cout"}, 20}};
  s.outputs = {{"D", {"D0", "D1", "D2", "D3"}, 0}, {"C", {"C"}, 0}};
  s.eval = [](std::span<const std::uint64_t> v) -> std::optional<std::vector<std::uint64_t>> {
    return std::vector<std::uint64_t>{v[0] % 10, v[0] >= 10 ? 1U : 0U};
  };
  return s;
}

FunctionalSpec ndigit_bcd_spec(int design, std::size_t n) {
  require_variant(design, "BCD design");
  require_positive(n, "bcd-ndigit");
  const bool carry = bcd_has_carry_in(design);
  FunctionalSpec s;
  s.name = "decimal addition, " + std::to_string(n) + " digit(s)";
  for (const std::string op : {"a", "b"}) {
    const std::string field = op == "a" ? "A" : "B";
    for (std::size_t d = 0; d < n; ++d) {
      Field f{n == 1 ? field : field + std::to_string(d), {}, 10};
      for (std::size_t i = 0; i < 4; ++i) f.bits.push_back(bcd_signal(idx(op, i), d, n));
      s.inputs.push_back(std::move(f));
    }
  }
  if (carry) s.inputs.push_back(Field{"c0", {"c0"}, 0});
  for (std::size_t d = 0; d < n; ++d) {
    Field f{n == 1 ? "S" : "S" + std::to_string(d), {}, 0};
    for (std::size_t i = 0; i < 4; ++i) f.bits.push_back(bcd_signal(idx("s", i), d, n));
    s.outputs.push_back(std::move(f));
  }
  s.outputs.push_back(Field{"cout", {"cout"}, 0});
  s.eval = [n, carry](std::span<const std::uint64_t> v) -> std::optional<std::vector<std::uint64_t>> {
    std::vector<std::uint64_t> out(n + 1);
    std::uint64_t c = carry ? v[2 * n] : 0;
    for (std::size_t d = 0; d < n; ++d) {
      const std::uint64_t t = v[d] + v[n + d] + c;
      out[d] = t % 10;
      c = t / 10;
    }
    out[n] = c;
    return out;
  };
  return s;
}

FunctionalSpec rbcd_spec(int variant) { return ndigit_bcd_spec(variant, 1); }

}  // namespace revadd
