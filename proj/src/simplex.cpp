// Copyright 2026 The metricvote Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "metricvote/simplex.hpp"

#include <cmath>

namespace metricvote {

double simplex_circumradius(std::size_t k) {
    return std::sqrt(static_cast<double>(k) / (2.0 * static_cast<double>(k + 1)));
}

double simplex_height(std::size_t k) {
    return std::sqrt(static_cast<double>(k + 1) / (2.0 * static_cast<double>(k)));
}

Point SimplexGeometry::face_circumcenter(const std::vector<std::size_t>& face) const {
    if (face.empty()) throw PreconditionError("empty simplex face");
    Point c(k, 0.0);
    for (std::size_t v : face)
        for (std::size_t d = 0; d < k; ++d) c[d] += vertices.at(v)[d];
    for (double& x : c) x /= static_cast<double>(face.size());
    return c;
}

SimplexGeometry simplex(std::size_t k) {
    if (k < 1) throw PreconditionError("simplex dimension must be at least 1");
    SimplexGeometry g;
    g.k = k;
    g.vertices.push_back(Point(k, 0.0));
    // Each new vertex sits above the centroid of the previous ones, at the
    // height of the simplex they form together.
    for (std::size_t j = 1; j <= k; ++j) {
        std::vector<std::size_t> face(j);
        for (std::size_t i = 0; i < j; ++i) face[i] = i;
        Point v = g.face_circumcenter(face);
        v[j - 1] = simplex_height(j);
        g.vertices.push_back(std::move(v));
    }
    std::vector<std::size_t> all(k + 1);
    for (std::size_t i = 0; i <= k; ++i) all[i] = i;
    g.circumcenter = g.face_circumcenter(all);
    g.circumradius = simplex_circumradius(k);
    g.height = simplex_height(k);
    return g;
}

double euclidean_distance(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t d = 0; d < a.size(); ++d) s += (a[d] - b[d]) * (a[d] - b[d]);
    return std::sqrt(s);
}

Point midpoint(const Point& a, const Point& b) {
    Point m(a.size());
    for (std::size_t d = 0; d < a.size(); ++d) m[d] = (a[d] + b[d]) / 2.0;
    return m;
}

}  // namespace metricvote
