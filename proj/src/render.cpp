// Copyright 2026 The latfree Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "latfree/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace latfree {

namespace {

struct Frame {
  std::string label;
  UnimodularSet set;
  std::vector<HalfspaceDoc> halfspaces;
  Rational min_f;
};

std::vector<Frame> frames_of(const CertificateDoc& cert) {
  std::vector<Frame> frames;
  for (const auto& t : cert.trace) frames.push_back({t.case_id, t.before, t.halfspaces, t.f_before});
  frames.push_back({cert.status, cert.final_set, cert.halfspaces, cert.argmin_f});
  return frames;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_csv(const CertificateDoc& cert) {
  std::ostringstream out;
  out << "index,case,m0_x,m0_y,m1_x,m1_y,m2_x,m2_y,m3_x,m3_y,min_f\n";
  const auto frames = frames_of(cert);
  for (std::size_t i = 0; i < frames.size(); ++i) {
    out << i << ',' << frames[i].label;
    for (const auto& m : frames[i].set.members()) out << ',' << m.x << ',' << m.y;
    out << ',' << frames[i].min_f.to_string() << '\n';
  }
  return out.str();
}

std::string render_svg(const CertificateDoc& cert) {
  constexpr double kScale = 40.0;
  constexpr double kPad = 1.5;
  const auto frames = frames_of(cert);
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool first = true;
  for (const auto& f : frames) {
    for (const auto& m : f.set.members()) {
      const double x = m.x.get_d(), y = m.y.get_d();
      if (first) {
        min_x = max_x = x;
        min_y = max_y = y;
        first = false;
      }
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
  }
  min_x -= kPad;
  min_y -= kPad;
  max_x += kPad;
  max_y += kPad;
  const double w = (max_x - min_x) * kScale;
  const double h = (max_y - min_y) * kScale;
  const double reach = std::hypot(max_x - min_x, max_y - min_y);
  auto px = [&](double x) { return fmt((x - min_x) * kScale); };
  auto py = [&](double y) { return fmt((max_y - y) * kScale); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w * frames.size())
      << "\" height=\"" << fmt(h + 20) << "\">\n";
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const Frame& f = frames[i];
    out << "<clipPath id=\"clip" << i << "\"><rect x=\"0\" y=\"0\" width=\"" << fmt(w)
        << "\" height=\"" << fmt(h) << "\"/></clipPath>\n";
    out << "<g id=\"frame" << i << "\" transform=\"translate(" << fmt(w * i) << ",0)\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << fmt(w) << "\" height=\"" << fmt(h)
        << "\" fill=\"white\" stroke=\"#999\"/>\n";
    const auto m = f.set.members();
    out << "<polygon points=\"";
    for (int idx : {0, 1, 3, 2}) {
      out << px(m[idx].x.get_d()) << ',' << py(m[idx].y.get_d()) << (idx == 2 ? "" : " ");
    }
    out << "\" fill=\"#cde\" stroke=\"#246\"/>\n";
    out << "<g clip-path=\"url(#clip" << i << ")\">\n";
    for (const auto& hs : f.halfspaces) {
      const double wx = hs.w.x.get_d(), wy = hs.w.y.get_d();
      double dx = -hs.grad.y.to_double(), dy = hs.grad.x.to_double();
      const double norm = std::hypot(dx, dy);
      if (norm > 0) {
        dx *= reach / norm;
        dy *= reach / norm;
      }
      out << "<line x1=\"" << px(wx - dx) << "\" y1=\"" << py(wy - dy) << "\" x2=\""
          << px(wx + dx) << "\" y2=\"" << py(wy + dy) << "\" stroke=\"#c33\"/>\n";
    }
    out << "</g>\n";
    for (const auto& p : m) {
      out << "<circle cx=\"" << px(p.x.get_d()) << "\" cy=\"" << py(p.y.get_d())
          << "\" r=\"3\" fill=\"#246\"/>\n";
    }
    out << "<text x=\"4\" y=\"" << fmt(h + 14) << "\" font-size=\"11\">" << i << ": "
        << f.label << " min f = " << f.min_f.to_string() << "</text>\n";
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace latfree
