# coding=utf-8
# Copyright (c) 2026, The Kukles Toolkit Authors.  All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""SVG, CSV and JSON emitters of the command line"""

import sys

import pandas as pd

from cycles import STABLE
from model.singularities import CENTER, SADDLE, SADDLE_NODE
from utils import ensure_directory_exists, to_json_document

WIDTH = 800
HEIGHT = 600
FORMAT_VERSION = '1'


def write_output(text, out=None):
    """Writes text to `out`, or to standard output when out is None."""
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    ensure_directory_exists(out)
    with open(out, 'w', encoding='utf-8', newline='') as writer:
        writer.write(text)


def json_output(result, config):
    return to_json_document({'format_version': FORMAT_VERSION,
                             'config': config,
                             'result': result})


def csv_output(rows):
    """CSV of a DataFrame or of a list of flat dicts."""
    frame = rows if isinstance(rows, pd.DataFrame) else pd.DataFrame(rows)
    return frame.to_csv(index=False)


class _Canvas(object):

    def __init__(self, window):
        self.window = window
        self.sx = WIDTH / (window.x_max - window.x_min)
        self.sy = HEIGHT / (window.y_max - window.y_min)

    def point(self, x, y):
        return ((x - self.window.x_min) * self.sx,
                HEIGHT - (y - self.window.y_min) * self.sy)

    def points(self, states):
        return ' '.join('{:.2f},{:.2f}'.format(*self.point(x, y))
                        for x, y in states)


def _glyph(canvas, singularity):
    cx, cy = canvas.point(singularity.location.x, singularity.location.y)
    if singularity.kind == SADDLE:
        return ('<path d="M{0:.2f} {1:.2f} l8 8 m-8 0 l8 -8" '
                'stroke="black" stroke-width="2"/>').format(cx - 4, cy - 4)
    if singularity.kind == SADDLE_NODE:
        return ('<rect x="{:.2f}" y="{:.2f}" width="8" height="8" '
                'fill="gray"/>').format(cx - 4, cy - 4)
    if singularity.kind == CENTER or singularity.trace > 0:
        fill = 'white'
    else:
        fill = 'black'
    return ('<circle cx="{:.2f}" cy="{:.2f}" r="5" stroke="black" '
            'fill="{}"/>').format(cx, cy, fill)


def svg_portrait(portrait, cycles=()):
    """Fixed 800 x 600 view of the portrait window.

    Orbits are thin gray polylines, separatrices red, cycles blue (dashed
    when unstable); singular points are crosses (saddles), squares
    (saddle-nodes) and circles filled when stable.
    """
    canvas = _Canvas(portrait.window)
    lines = ['<svg xmlns="http://www.w3.org/2000/svg" width="{0}" '
             'height="{1}" viewBox="0 0 {0} {1}">'.format(WIDTH, HEIGHT),
             '<rect width="{}" height="{}" fill="white"/>'.format(WIDTH,
                                                                  HEIGHT)]
    for label, trajectory in portrait.trajectories.items():
        colour, width = ('red', 1.5) if label.startswith('S') else \
            ('gray', 0.8)
        lines.append('<polyline data-curve="{}" points="{}" fill="none" '
                     'stroke="{}" stroke-width="{}"/>'.format(
                         label, canvas.points(trajectory.states), colour,
                         width))
    for cycle in cycles:
        if cycle.polyline is None:
            continue
        dash = '' if cycle.stability == STABLE else \
            ' stroke-dasharray="6 4"'
        lines.append('<polyline class="cycle" points="{}" fill="none" '
                     'stroke="blue" stroke-width="2.5"{}/>'.format(
                         canvas.points(cycle.polyline), dash))
    for singularity in portrait.singularities:
        lines.append(_glyph(canvas, singularity))
    lines.append('</svg>')
    return '\n'.join(lines) + '\n'
