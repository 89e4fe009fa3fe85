#ifndef FACIAL_FACIAL_HPP
#define FACIAL_FACIAL_HPP

#include <facial/error.hpp>
#include <facial/rational.hpp>
#include <facial/exactla.hpp>
#include <facial/polyset.hpp>
#include <facial/json_io.hpp>
#include <facial/faces.hpp>
#include <facial/sampling.hpp>
#include <facial/icore.hpp>
#include <facial/closure.hpp>
#include <facial/seqgallery.hpp>

#endif // FACIAL_FACIAL_HPP
