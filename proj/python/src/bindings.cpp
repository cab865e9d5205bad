#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>

#include "spinpaint/spinpaint.hpp"

namespace py = pybind11;
using namespace spinpaint;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;
using MaskArray = py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>;

void require_2d(const py::buffer_info& info, const char* what) {
  if (info.ndim != 2) throw py::value_error(std::string(what) + " must be a 2-D array");
}

Image to_image(const Array& a) {
  const auto info = a.request();
  require_2d(info, "image");
  const auto* data = static_cast<const double*>(info.ptr);
  return Image(static_cast<std::size_t>(info.shape[0]), static_cast<std::size_t>(info.shape[1]),
               std::vector<double>(data, data + info.size));
}

py::array_t<double> from_image(const Image& img) {
  py::array_t<double> out({img.rows(), img.cols()});
  std::memcpy(out.mutable_data(), img.pixels().data(), img.size() * sizeof(double));
  return out;
}

// Any nonzero entry counts as a known pixel.
Mask to_mask(const MaskArray& a) {
  const auto info = a.request();
  require_2d(info, "mask");
  const auto* data = static_cast<const std::uint8_t*>(info.ptr);
  return Mask(static_cast<std::size_t>(info.shape[0]), static_cast<std::size_t>(info.shape[1]),
              std::vector<std::uint8_t>(data, data + info.size));
}

py::array_t<bool> from_mask(const Mask& m) {
  py::array_t<bool> out({m.rows(), m.cols()});
  auto* dst = out.mutable_data();
  for (std::size_t i = 0; i < m.size(); ++i) dst[i] = m.known(i);
  return out;
}

TransformKind kind_of(const std::string& text) {
  const auto kind = parse_transform_kind(text);
  if (!kind) throw py::value_error("unknown transform kind: " + text);
  return *kind;
}

}  // namespace

PYBIND11_MODULE(_spinpaint, m) {
  m.doc() = "Sparsity-based image inpainting by alternating projections";

  auto base = py::register_exception<Error>(m, "SpinpaintError", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", base);
  py::register_exception<DimensionError>(m, "DimensionError", base);
  py::register_exception<SymmetryError>(m, "SymmetryError", base);
  py::register_exception<SupportError>(m, "SupportError", base);
  py::register_exception<PlacementError>(m, "PlacementError", base);

  py::class_<SparsityPattern>(m, "Pattern")
      .def_property_readonly("rows", &SparsityPattern::rows)
      .def_property_readonly("cols", &SparsityPattern::cols)
      .def_property_readonly("kind", [](const SparsityPattern& p) { return std::string(to_string(p.kind())); })
      .def_property_readonly("zero_count", &SparsityPattern::zero_count)
      .def_property_readonly("fraction", &SparsityPattern::fraction)
      .def_property_readonly("zero_set",
                             [](const SparsityPattern& p) {
                               py::array_t<bool> out({p.rows(), p.cols()});
                               auto* dst = out.mutable_data();
                               for (std::size_t i = 0; i < p.size(); ++i) dst[i] = p.contains(i);
                               return out;
                             })
      .def("to_bytes",
           [](const SparsityPattern& p) {
             const auto bytes = encode_pattern(p);
             return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
           })
      .def_static("from_bytes",
                  [](const py::bytes& data) {
                    const std::string s = data;
                    return decode_pattern(std::span(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
                  })
      .def(py::self == py::self)
      .def("__repr__", [](const SparsityPattern& p) {
        return "<Pattern " + std::string(to_string(p.kind())) + " " + std::to_string(p.rows()) + "x" +
               std::to_string(p.cols()) + " zeros=" + std::to_string(p.zero_count()) + ">";
      });

  m.def("read_pgm", [](const std::string& path) { return from_image(read_pgm(path)); }, py::arg("path"));
  m.def("write_pgm", [](const Array& img, const std::string& path) { write_pgm(to_image(img), path); },
        py::arg("image"), py::arg("path"));
  m.def("read_mask", [](const std::string& path) { return from_mask(read_mask(path)); }, py::arg("path"));
  m.def("write_mask", [](const MaskArray& mask, const std::string& path) { write_mask(to_mask(mask), path); },
        py::arg("mask"), py::arg("path"));
  m.def("read_pattern", [](const std::string& path) { return read_pattern(path); }, py::arg("path"));
  m.def("write_pattern", [](const SparsityPattern& p, const std::string& path) { write_pattern(p, path); },
        py::arg("pattern"), py::arg("path"));

  m.def("block_mask",
        [](std::size_t rows, std::size_t cols, std::size_t count, std::size_t block_size, std::uint64_t seed) {
          return from_mask(block_mask(rows, cols, {block_size, count, seed}));
        },
        py::arg("rows"), py::arg("cols"), py::arg("count"), py::arg("block_size") = 16, py::arg("seed") = 1);
  m.def("stroke_mask",
        [](std::size_t rows, std::size_t cols, std::size_t count, std::size_t width, std::uint64_t seed) {
          return from_mask(stroke_mask(rows, cols, count, width, seed));
        },
        py::arg("rows"), py::arg("cols"), py::arg("count"), py::arg("width") = 2, py::arg("seed") = 1);
  m.def("apply_mask", [](const Array& img, const MaskArray& mask) {
        return from_image(apply_mask(to_image(img), to_mask(mask)));
      }, py::arg("image"), py::arg("mask"));

  m.def("sparsify",
        [](const Array& img, const std::string& kind, double fraction) {
          SparseImage s = sparsify(to_image(img), kind_of(kind), fraction);
          return py::make_tuple(from_image(s.image), std::move(s.pattern));
        },
        py::arg("image"), py::arg("kind") = "dct", py::arg("fraction") = 0.95,
        "Returns (sparse_image, pattern).");
  m.def("derive_pattern",
        [](const Array& img, const std::string& kind, double fraction) {
          return derive_pattern(forward(to_image(img), kind_of(kind)), fraction);
        },
        py::arg("image"), py::arg("kind") = "dct", py::arg("fraction") = 0.95);
  m.def("project_sparse", [](const Array& img, const SparsityPattern& p) {
        return from_image(project_sparse(to_image(img), p));
      }, py::arg("image"), py::arg("pattern"));
  m.def("project_data", [](const Array& img, const Array& known, const MaskArray& mask) {
        return from_image(project_data(to_image(img), to_image(known), to_mask(mask)));
      }, py::arg("image"), py::arg("known"), py::arg("mask"));

  m.def("inpaint",
        [](const Array& corrupted, const MaskArray& mask, const SparsityPattern& pattern,
           std::size_t iterations, bool early_stop) {
          RecoveryConfig config;
          config.kind = pattern.kind();
          config.iterations = iterations;
          config.early_stop = early_stop;
          const Image c = to_image(corrupted);
          const Mask k = to_mask(mask);
          const Image out = [&] {
            py::gil_scoped_release release;
            return inpaint_with_side_info(apply_mask(c, k), k, pattern, config).output;
          }();
          return from_image(out);
        },
        py::arg("corrupted"), py::arg("mask"), py::arg("pattern"), py::arg("iterations") = 500,
        py::arg("early_stop") = false);
  m.def("inpaint_blind",
        [](const Array& corrupted, const MaskArray& mask, const std::string& kind, double fraction,
           std::size_t iterations) {
          const Image c = to_image(corrupted);
          const Mask k = to_mask(mask);
          const BlindConfig config{kind_of(kind), fraction, iterations};
          const Image out = [&] {
            py::gil_scoped_release release;
            return inpaint_blind(c, k, config).output;
          }();
          return from_image(out);
        },
        py::arg("corrupted"), py::arg("mask"), py::arg("kind") = "fft", py::arg("fraction") = 0.95,
        py::arg("iterations") = 400);
  m.def("tv_reconstruct", [](const Array& corrupted, const MaskArray& mask) {
        return from_image(tv_reconstruct(to_image(corrupted), to_mask(mask)));
      }, py::arg("corrupted"), py::arg("mask"));
  m.def("estimate_pattern",
        [](const Array& corrupted, const MaskArray& mask, const std::string& kind, double fraction) {
          return estimate_pattern(to_image(corrupted), to_mask(mask), kind_of(kind), fraction);
        },
        py::arg("corrupted"), py::arg("mask"), py::arg("kind") = "fft", py::arg("fraction") = 0.95);

  m.def("psnr", [](const Array& a, const Array& b) { return psnr(to_image(a), to_image(b)); },
        py::arg("a"), py::arg("b"));
  m.def("pattern_error",
        [](const SparsityPattern& estimated, const SparsityPattern& reference) {
          const PatternError e = pattern_error(estimated, reference);
          return py::make_tuple(e.miss_detection_pct, e.false_alarm_pct);
        },
        py::arg("estimated"), py::arg("reference"), "Returns (miss_detection_pct, false_alarm_pct).");
}
