#include "panodent/image.hpp"

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include <algorithm>
#include <cmath>

namespace panodent {

namespace {

cv::Mat to_mat8(const Image& img) {
  cv::Mat m(img.height, img.width, CV_8UC1);
  for (int y = 0; y < img.height; ++y) {
    uchar* row = m.ptr<uchar>(y);
    for (int x = 0; x < img.width; ++x) {
      const float v = std::clamp(img.at(x, y), 0.0f, 1.0f);
      row[x] = static_cast<uchar>(std::lround(v * 255.0f));
    }
  }
  return m;
}

Image from_mat8(const cv::Mat& m) {
  Image img(m.cols, m.rows);
  for (int y = 0; y < m.rows; ++y) {
    const uchar* row = m.ptr<uchar>(y);
    for (int x = 0; x < m.cols; ++x) {
      img.at(x, y) = static_cast<float>(row[x]) / 255.0f;
    }
  }
  return img;
}

}  // namespace

float Image::mean() const {
  if (px.empty()) return 0.0f;
  double s = 0.0;
  for (float v : px) s += v;
  return static_cast<float>(s / static_cast<double>(px.size()));
}

void Image::clamp01() {
  for (float& v : px) v = std::clamp(v, 0.0f, 1.0f);
}

Image load_image_gray(const std::filesystem::path& path) {
  cv::Mat m = cv::imread(path.string(), cv::IMREAD_GRAYSCALE);
  if (m.empty()) {
    throw LoadError("cannot read image: " + path.string());
  }
  return from_mat8(m);
}

void save_image_gray(const Image& img, const std::filesystem::path& path) {
  if (img.width <= 0 || img.height <= 0) {
    throw DomainError("save_image_gray: empty image");
  }
  if (!cv::imwrite(path.string(), to_mat8(img))) {
    throw IoError("cannot write image: " + path.string());
  }
}

Image load_mask(const std::filesystem::path& path) {
  Image img = load_image_gray(path);
  for (float& v : img.px) v = v > 0.5f ? 1.0f : 0.0f;
  return img;
}

void save_mask(const Image& mask, const std::filesystem::path& path) {
  cv::Mat m(mask.height, mask.width, CV_8UC1);
  for (int y = 0; y < mask.height; ++y) {
    uchar* row = m.ptr<uchar>(y);
    for (int x = 0; x < mask.width; ++x) {
      row[x] = mask.at(x, y) > 0.5f ? 255 : 0;
    }
  }
  const std::vector<int> params = {cv::IMWRITE_PNG_BILEVEL, 1};
  if (!cv::imwrite(path.string(), m, params)) {
    throw IoError("cannot write mask: " + path.string());
  }
}

Image warp_affine(const Image& img, const std::array<double, 6>& M, float fill) {
  cv::Mat src(img.height, img.width, CV_32FC1,
              const_cast<float*>(img.px.data()));
  cv::Mat map = (cv::Mat_<double>(2, 3) << M[0], M[1], M[2], M[3], M[4], M[5]);
  cv::Mat dst;
  cv::warpAffine(src, dst, map, src.size(), cv::INTER_LINEAR,
                 cv::BORDER_CONSTANT, cv::Scalar(fill));
  Image out(img.width, img.height);
  for (int y = 0; y < out.height; ++y) {
    const float* row = dst.ptr<float>(y);
    std::copy(row, row + out.width, out.px.begin() + static_cast<size_t>(y) * out.width);
  }
  return out;
}

namespace {

Image resample_region_impl(const Image& img, double x0, double y0, double x1,
                           double y1, int out_w, int out_h, int interp) {
  if (!(x1 > x0) || !(y1 > y0) || out_w <= 0 || out_h <= 0) {
    throw DomainError("resample_region: degenerate request");
  }
  cv::Mat src(img.height, img.width, CV_32FC1,
              const_cast<float*>(img.px.data()));
  // Affine map taking the source rect onto the out_w x out_h grid.
  const double sx = (x1 - x0) / out_w;
  const double sy = (y1 - y0) / out_h;
  // Destination pixel centre (u+0.5, v+0.5) samples source (x0 + (u+0.5)*sx, ...).
  cv::Mat map = (cv::Mat_<double>(2, 3) << sx, 0.0, x0 + 0.5 * sx - 0.5,
                 0.0, sy, y0 + 0.5 * sy - 0.5);
  cv::Mat dst;
  cv::warpAffine(src, dst, map, cv::Size(out_w, out_h),
                 interp | cv::WARP_INVERSE_MAP, cv::BORDER_REPLICATE);
  Image out(out_w, out_h);
  for (int y = 0; y < out_h; ++y) {
    const float* row = dst.ptr<float>(y);
    std::copy(row, row + out_w, out.px.begin() + static_cast<size_t>(y) * out_w);
  }
  return out;
}

}  // namespace

Image resample_region(const Image& img, double x0, double y0, double x1, double y1,
                      int out_w, int out_h) {
  Image out = resample_region_impl(img, x0, y0, x1, y1, out_w, out_h, cv::INTER_LINEAR);
  out.clamp01();
  return out;
}

Image resample_region_nearest(const Image& img, double x0, double y0, double x1,
                              double y1, int out_w, int out_h) {
  return resample_region_impl(img, x0, y0, x1, y1, out_w, out_h, cv::INTER_NEAREST);
}

}  // namespace panodent
