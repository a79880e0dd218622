#include "targetrank/util.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <unordered_set>

namespace targetrank {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  auto mix = [](std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  std::uint64_t a = mix(master + 0x9e3779b97f4a7c15ull);
  return mix(a ^ (stream + 0x9e3779b97f4a7c15ull * (stream + 1)));
}

std::vector<std::uint32_t> sample_without_replacement(std::uint32_t n, std::uint32_t k, Rng& rng) {
  if (k > n) throw std::invalid_argument("sample_without_replacement: k exceeds population size");
  std::unordered_set<std::uint32_t> seen;
  std::vector<std::uint32_t> out;
  out.reserve(k);
  for (std::uint32_t j = n - k; j < n; ++j) {
    auto t = static_cast<std::uint32_t>(rng.below(j + 1));
    if (seen.insert(t).second) {
      out.push_back(t);
    } else {
      seen.insert(j);
      out.push_back(j);
    }
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, ptr);
}

std::string format_fixed_trunc(double v, int decimals) {
  if (decimals < 0) return format_double(v);
  double scale = std::pow(10.0, decimals);
  // tiny guard so values stored a hair below their decimal form (0.29 stored
  // as 0.2899...98) do not lose their last digit
  double scaled = v * scale + (v >= 0 ? 1e-9 : -1e-9);
  double t = std::trunc(scaled) / scale;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, t);
  std::string s(buf);
  if (s.find('.') != std::string::npos) {
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
  }
  return s;
}

bool is_valid_utf8(std::string_view s) {
  std::size_t i = 0;
  const auto n = s.size();
  while (i < n) {
    auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
      ++i;
      continue;
    }
    int len;
    unsigned cp_min;
    if ((b0 & 0xe0) == 0xc0) {
      len = 2;
      cp_min = 0x80;
    } else if ((b0 & 0xf0) == 0xe0) {
      len = 3;
      cp_min = 0x800;
    } else if ((b0 & 0xf8) == 0xf0) {
      len = 4;
      cp_min = 0x10000;
    } else {
      return false;
    }
    if (i + len > n) return false;
    unsigned cp = b0 & (0x7f >> len);
    for (int j = 1; j < len; ++j) {
      auto b = static_cast<unsigned char>(s[i + j]);
      if ((b & 0xc0) != 0x80) return false;
      cp = (cp << 6) | (b & 0x3f);
    }
    if (cp < cp_min || cp > 0x10ffff) return false;
    if (cp >= 0xd800 && cp <= 0xdfff) return false;  // surrogates
    i += len;
  }
  return true;
}

}  // namespace targetrank
