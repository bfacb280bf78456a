#!/usr/bin/env python
# -*- coding: utf-8 -*-

from cli.app import main

if __name__ == '__main__':
    main()
