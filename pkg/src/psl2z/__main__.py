#!/usr/bin/python
# -*- coding: utf-8 -*-
# date: 2024/3/12
# author: clarkmonkey@163.com

import sys

from .cli import main

sys.exit(main())
