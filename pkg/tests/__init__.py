﻿"""
Tests package
"""
