#pragma once

#include <rainbowtri/colored_graph.hpp>
#include <rainbowtri/errors.hpp>
#include <rainbowtri/extremal.hpp>
#include <rainbowtri/harness.hpp>
#include <rainbowtri/io.hpp>
#include <rainbowtri/oriented_graph.hpp>
#include <rainbowtri/reductions.hpp>
#include <rainbowtri/theorems.hpp>
#include <rainbowtri/triangle.hpp>
