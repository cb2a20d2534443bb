#!/usr/bin/python
# -*- coding: utf-8 -*-
# date: 2021/8/10
# author: clarkmonkey@163.com

from setuptools import setup

setup()
